#include "graphmag/poly_matrix.hpp"

#include <utility>

#include "graphmag/errors.hpp"

namespace graphmag {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(1);
  return m;
}

namespace {

struct Elimination {
  /// Last pivot; equals +-det for a nonsingular matrix, zero if singular.
  Polynomial last_pivot;
  bool odd_swaps = false;
  bool singular = false;
};

// In-place Bareiss forward elimination over the leading n columns of an
// n x (n + extra) matrix. Every division is by the previous pivot and is exact
// by Sylvester's identity; divide_exact throws if that ever fails.
Elimination bareiss_forward(PolyMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t width = a.cols();
  Elimination result;
  Polynomial previous = Polynomial::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t pivot_row = k + 1;
      while (pivot_row < n && a(pivot_row, k).is_zero()) ++pivot_row;
      if (pivot_row == n) {
        result.singular = true;
        return result;
      }
      for (std::size_t j = 0; j < width; ++j) std::swap(a(k, j), a(pivot_row, j));
      result.odd_swaps = !result.odd_swaps;
    }
    const Polynomial& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Polynomial factor = a(i, k);
      for (std::size_t j = k + 1; j < width; ++j) {
        Polynomial updated = a(i, j) * pivot - factor * a(k, j);
        a(i, j) = divide_exact(updated, previous);
      }
      a(i, k) = Polynomial{};
    }
    previous = a(k, k);
  }
  result.last_pivot = n == 0 ? Polynomial::constant(1) : a(n - 1, n - 1);
  return result;
}

}  // namespace

Polynomial bareiss_determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  PolyMatrix a = m;
  Elimination e = bareiss_forward(a);
  if (e.singular) return {};
  return e.odd_swaps ? -e.last_pivot : e.last_pivot;
}

DeterminantAndAdjugateSum bareiss_det_and_adjugate_sum(const PolyMatrix& m) {
  if (!m.is_square()) throw InputError("adjugate sum of a non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix bordered(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) bordered(i, j) = m(i, j);
    bordered(i, n) = Polynomial::constant(1);
    bordered(n, i) = Polynomial::constant(1);
  }
  return {bareiss_determinant(m), -bareiss_determinant(bordered)};
}

std::vector<RationalFunction> cramer_row_sums(const PolyMatrix& m) {
  if (!m.is_square()) throw InputError("linear solve with a non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n) = Polynomial::constant(1);
  }
  Elimination e = bareiss_forward(a);
  if (e.singular || e.last_pivot.is_zero()) throw SingularMatrixError("matrix is singular");

  // Fraction-free back substitution: y_i = D * x_i with D the last pivot.
  const Polynomial& d = e.last_pivot;
  std::vector<Polynomial> y(n);
  for (std::size_t i = n; i-- > 0;) {
    Polynomial acc = d * a(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * y[j];
    y[i] = divide_exact(acc, a(i, i));
  }
  std::vector<RationalFunction> w;
  w.reserve(n);
  for (auto& yi : y) w.emplace_back(std::move(yi), d);
  return w;
}

}  // namespace graphmag
