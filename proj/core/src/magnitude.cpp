#include "graphmag/magnitude.hpp"

#include <utility>

#include "graphmag/distance.hpp"
#include "graphmag/errors.hpp"
#include "graphmag/metric.hpp"

namespace graphmag {

ZMatrix::ZMatrix(const Graph& g) : m_(g.vertex_count(), g.vertex_count()) {
  const DistanceMatrix d = all_pairs_distances(g);
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex y = 0; y < g.vertex_count(); ++y)
      if (d(x, y).is_finite()) m_(x, y) = Polynomial::monomial(1, d(x, y).value());
}

RationalFunction magnitude_rational(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  auto [det, adj_sum] = bareiss_det_and_adjugate_sum(ZMatrix(g).matrix());
  return {std::move(adj_sum), std::move(det)};
}

RationalFunction Weighting::total() const {
  RationalFunction sum;
  for (const auto& w : weights) sum += w;
  return sum;
}

Weighting weighting(const Graph& g) { return {cramer_row_sums(ZMatrix(g).matrix())}; }

bool verify_weighting(const Graph& g, std::span<const RationalFunction> w) {
  if (w.size() != g.vertex_count()) return false;
  const DistanceMatrix d = all_pairs_distances(g);
  const RationalFunction one(1);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    RationalFunction row;
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      if (!d(x, y).is_finite() || w[y].is_zero()) continue;
      row += q_power(d(x, y).value()) * w[y];
    }
    if (row != one) return false;
  }
  return true;
}

TruncatedSeries magnitude_series_oracle(const Graph& g, std::size_t order) {
  const std::size_t n = g.vertex_count();
  const DistanceMatrix d = all_pairs_distances(g);
  // r holds the row vector 1^T B^k, one truncated series per vertex.
  std::vector<std::vector<Integer>> r(n, std::vector<Integer>(order + 1));
  for (auto& row : r) row[0] = 1;
  TruncatedSeries total(order);
  total[0] = static_cast<unsigned long>(n);

  // Every nonzero entry of B has valuation >= 1, so sm(B^k) vanishes mod q^(order+1) beyond k = order.
  for (std::size_t k = 1; k <= order; ++k) {
    std::vector<std::vector<Integer>> next(n, std::vector<Integer>(order + 1));
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (x == y || !d(x, y).is_finite()) continue;
        const std::size_t shift = d(x, y).value();
        for (std::size_t t = 0; t + shift <= order; ++t) next[y][t + shift] += r[x][t];
      }
    }
    r = std::move(next);
    for (const auto& row : r) {
      for (std::size_t t = 0; t <= order; ++t) {
        if (k % 2 == 0)
          total[t] += row[t];
        else
          total[t] -= row[t];
      }
    }
  }
  return total;
}

TruncatedSeries magnitude_series(const Graph& g, std::size_t order) {
  return series_from_rational(magnitude_rational(g), order);
}

MagnitudeResult compute_magnitude(const Graph& g, std::optional<std::size_t> order) {
  MagnitudeResult result{magnitude_rational(g), std::nullopt, MagnitudeSource::GenericMatrix};
  if (order) result.series = series_from_rational(result.rational, *order);
  return result;
}

RationalFunction vertex_transitive_magnitude(const Graph& g) {
  if (!is_vertex_transitive(g)) throw HypothesisError("graph is not vertex-transitive");
  if (g.vertex_count() == 0) return {};
  Polynomial sphere_sum;
  for (ExtDistance dist : distances_from(g, 0))
    if (dist.is_finite()) sphere_sum += Polynomial::monomial(1, dist.value());
  return {Polynomial::constant(static_cast<unsigned long>(g.vertex_count())), std::move(sphere_sum)};
}

RationalFunction magnitude_one_point_join(const RationalFunction& mg, const RationalFunction& mh) {
  return mg + mh - RationalFunction(1);
}

RationalFunction magnitude_bipartite_edge_glue(const RationalFunction& mg, const RationalFunction& mh) {
  return mg + mh - RationalFunction(Polynomial{2}, Polynomial{1, 1});
}

ValueAtOneReport connected_components_vs_mag_at_1(const Graph& g) {
  ValueAtOneReport report{magnitude_rational(g), std::nullopt, component_count(g)};
  try {
    report.value_at_one = report.magnitude.evaluate(Rational(1));
  } catch (const PoleError&) {
  }
  return report;
}

}  // namespace graphmag
