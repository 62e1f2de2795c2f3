#include "graphmag/series.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "graphmag/errors.hpp"

namespace graphmag {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<long> coefficients)
    : coeffs_(order + 1) {
  std::size_t k = 0;
  for (long c : coefficients) {
    if (k > order) break;
    coeffs_[k++] = c;
  }
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  TruncatedSeries s(order);
  auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size() && k <= order; ++k) s.coeffs_[k] = c[k];
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  TruncatedSeries s(std::min(order, this->order()));
  std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  os << '[';
  for (std::size_t k = 0; k <= s.order(); ++k) os << (k ? ", " : "") << s[k];
  return os << ']';
}

TruncatedSeries series_from_rational(const RationalFunction& f, std::size_t order) {
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  const Integer d0 = den.constant_term();
  if (d0 != 1 && d0 != -1)
    throw NotIntegerInvertibleError("denominator constant term of " + f.to_string() +
                                    " is not a unit in Z");
  auto dc = den.coefficients();
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) {
    Integer acc = num.coefficient(k);
    const std::size_t upto = std::min(k, dc.size() - 1);
    for (std::size_t j = 1; j <= upto; ++j) {
      mpz_submul(acc.get_mpz_t(), dc[j].get_mpz_t(), s[k - j].get_mpz_t());
    }
    s[k] = d0 == 1 ? acc : Integer(-acc);
  }
  return s;
}

}  // namespace graphmag
