#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "graphmag/integer.hpp"
#include "graphmag/polynomial.hpp"

namespace graphmag {

/// Element of Q(q) held as a quotient of integer polynomials in canonical form:
///  - gcd(numerator, denominator) in Z[q] is 1 (integer content included),
///  - the lowest nonzero coefficient of the denominator is positive,
///  - zero is 0/1.
/// Canonical form is unique, so equality is componentwise comparison.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Integer& value);  // NOLINT: integers embed implicitly
  RationalFunction(long value) : RationalFunction(Integer(value)) {}  // NOLINT
  explicit RationalFunction(Polynomial numerator);
  /// Throws DomainError on a zero denominator.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  /// Throws DomainError when dividing by zero.
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Exact value at a rational point; throws PoleError at a root of the denominator.
  Rational evaluate(const Rational& at) const;

  /// "6/(1+4q)", "(4-2q)/(1+2q-q^2)", "5".
  std::string to_string() const;

 private:
  struct Canonical {};
  RationalFunction(Polynomial numerator, Polynomial denominator, Canonical)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// q as a rational function.
RationalFunction q_power(std::size_t k);

}  // namespace graphmag
