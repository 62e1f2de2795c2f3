#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "graphmag/integer.hpp"

namespace graphmag {

/// Element of Z[q], stored densely in ascending powers of q.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and equality is vector equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Integer& c);
  /// c * q^degree
  static Polynomial monomial(const Integer& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of q^k; zero beyond the degree.
  Integer coefficient(std::size_t k) const;
  const Integer& leading_coefficient() const;
  Integer constant_term() const { return coefficient(0); }
  /// Coefficient of the lowest power of q that appears; zero for the zero polynomial.
  Integer lowest_coefficient() const;

  /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
  Integer content() const;
  /// this / content(), sign preserved.
  Polynomial primitive_part() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Multiply by q^k.
  Polynomial shifted(std::size_t k) const;
  /// Divide every coefficient by `divisor`; throws InternalError if any
  /// coefficient is not a multiple.
  Polynomial divided_exactly(const Integer& divisor) const;

  Polynomial derivative() const;
  Rational evaluate(const Rational& at) const;

  /// Ascending-power rendering, e.g. "1+3q+2q^2".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Exact quotient a / b in Z[q]. Throws InternalError if b does not divide a
/// (nonzero remainder or a non-integral quotient coefficient), DomainError if
/// b is zero.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b (b nonzero): lc(b)^k * a mod b for some k >= 0.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor in Z[q] with positive leading coefficient.
/// The integer content gcd is included, so gcd(2q+2, 4) = 2.
/// Throws InputError if both arguments are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace graphmag
