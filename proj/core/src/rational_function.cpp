#include "graphmag/rational_function.hpp"

#include <ostream>
#include <utility>

#include "graphmag/errors.hpp"

namespace graphmag {

RationalFunction::RationalFunction(const Integer& value)
    : num_(Polynomial::constant(value)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g != Polynomial::constant(1)) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  if (den_.lowest_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Canonical{}}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw DomainError("division by the zero rational function");
  num_ *= other.den_;
  den_ *= other.num_;
  canonicalize();
  return *this;
}

Rational RationalFunction::evaluate(const Rational& at) const {
  Rational d = den_.evaluate(at);
  if (d == 0) throw PoleError("rational function " + to_string() + " has a pole at " + at.get_str());
  Rational r = num_.evaluate(at) / d;
  r.canonicalize();
  return r;
}

std::string RationalFunction::to_string() const {
  auto terms = [](const Polynomial& p) {
    long n = 0;
    for (const auto& c : p.coefficients())
      if (c != 0) ++n;
    return n;
  };
  if (den_ == Polynomial::constant(1)) return num_.to_string();
  std::string out = terms(num_) > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  out += "/";
  out += den_.degree() == 0 ? den_.to_string() : "(" + den_.to_string() + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

RationalFunction q_power(std::size_t k) { return RationalFunction(Polynomial::monomial(1, k)); }

}  // namespace graphmag
