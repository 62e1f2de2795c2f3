#include "graphmag/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "graphmag/errors.hpp"

namespace graphmag {

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(const Integer& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

const Integer& Polynomial::leading_coefficient() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer Polynomial::lowest_coefficient() const {
  for (const auto& c : coeffs_)
    if (c != 0) return c;
  return 0;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  return divided_exactly(content());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> out(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::divided_exactly(const Integer& divisor) const {
  if (divisor == 0) throw DomainError("polynomial division by the zero integer");
  Polynomial r = *this;
  for (auto& c : r.coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
      throw InternalError("inexact integer division of polynomial coefficients");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
  }
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (k == 0 || magnitude != 1) os << magnitude;
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InternalError("inexact polynomial division: degree too small");
  auto bc = b.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Integer> quot(rem.size() - db);
  const Integer& lead = bc[db];
  Integer t;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw InternalError("inexact polynomial division: non-integral quotient");
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (rem[j] != 0) throw InternalError("inexact polynomial division: nonzero remainder");
  }
  return Polynomial(std::move(quot));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  Polynomial r = a;
  const Integer& lb = b.leading_coefficient();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    Integer lr = r.leading_coefficient();
    r = r * lb - b.shifted(shift) * lr;
  }
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd of two zero polynomials");
  Integer content_gcd;
  mpz_gcd(content_gcd.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

  Polynomial x = a.primitive_part();
  Polynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  // Primitive polynomial remainder sequence over Z.
  while (!y.is_zero()) {
    Polynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  if (x.leading_coefficient() < 0) x = -x;
  return x * content_gcd;
}

}  // namespace graphmag
