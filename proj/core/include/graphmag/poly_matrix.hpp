#pragma once

#include <cstddef>
#include <vector>

#include "graphmag/polynomial.hpp"
#include "graphmag/rational_function.hpp"

namespace graphmag {

/// Dense row-major matrix over Z[q].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

struct DeterminantAndAdjugateSum {
  Polynomial determinant;
  /// Sum of all entries of adj(M).
  Polynomial adjugate_sum;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws InputError for a non-square matrix.
Polynomial bareiss_determinant(const PolyMatrix& m);

/// det(M) and sm(adj M). The adjugate sum is read off the bordered matrix
/// [[M, 1], [1^T, 0]], whose determinant is -sm(adj M); both determinants use
/// the same fraction-free routine.
DeterminantAndAdjugateSum bareiss_det_and_adjugate_sum(const PolyMatrix& m);

/// Solution w of M w = (1, ..., 1)^T, i.e. the row sums of M^{-1}, in canonical
/// form. One fraction-free elimination over [M | 1] followed by fraction-free
/// back substitution. Throws SingularMatrixError if det M = 0.
std::vector<RationalFunction> cramer_row_sums(const PolyMatrix& m);

}  // namespace graphmag
