#include "graphmag/closed_forms.hpp"

#include "graphmag/errors.hpp"

namespace graphmag::closed_form {

namespace {

Integer as_integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

}  // namespace

RationalFunction complete(std::size_t n) {
  if (n < 1) throw InputError("complete graph closed form needs n >= 1");
  return {Polynomial::constant(as_integer(n)),
          Polynomial(std::vector<Integer>{1, as_integer(n - 1)})};
}

RationalFunction cycle(std::size_t n) {
  if (n < 1) throw InputError("cycle closed form needs n >= 1");
  const std::size_t lo = (n + 1) / 2;
  const std::size_t hi = (n + 2) / 2;
  Polynomial num = Polynomial{-1, 1} * as_integer(n);
  Polynomial den = Polynomial::monomial(1, lo) + Polynomial::monomial(1, hi) - Polynomial{1, 1};
  return {std::move(num), std::move(den)};
}

RationalFunction complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InputError("complete bipartite closed form needs m, n >= 1");
  const Integer mm = as_integer(m);
  const Integer nn = as_integer(n);
  Polynomial num(std::vector<Integer>{mm + nn, -(2 * mm * nn - mm - nn)});
  Polynomial den = Polynomial{1, 1} * Polynomial(std::vector<Integer>{1, 0, -(mm - 1) * (nn - 1)});
  return {std::move(num), std::move(den)};
}

RationalFunction forest(std::size_t vertices, std::size_t edges, std::size_t components) {
  if (vertices != components + edges)
    throw InputError("a forest has v = k + e (got v=" + std::to_string(vertices) +
                     ", e=" + std::to_string(edges) + ", k=" + std::to_string(components) + ")");
  return RationalFunction(as_integer(components)) +
         RationalFunction(Polynomial{1, -1} * as_integer(edges), Polynomial{1, 1});
}

}  // namespace graphmag::closed_form
