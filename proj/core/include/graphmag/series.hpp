#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "graphmag/integer.hpp"
#include "graphmag/polynomial.hpp"
#include "graphmag/rational_function.hpp"

namespace graphmag {

/// Element of Z[[q]] modulo q^(order+1): exactly order+1 coefficients.
/// Binary operations on series of different orders truncate to the smaller one.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(std::size_t order, std::vector<Integer> coefficients);
  TruncatedSeries(std::size_t order, std::initializer_list<long> coefficients);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }
  Integer& operator[](std::size_t k) { return coeffs_.at(k); }

  TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Integer& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Integer& s) { return a *= s; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

/// Power series of f through q^order, i.e. the unique s with
/// denominator * s = numerator mod q^(order+1).
/// Throws NotIntegerInvertibleError unless the denominator's constant term is +1 or -1.
TruncatedSeries series_from_rational(const RationalFunction& f, std::size_t order);

}  // namespace graphmag
