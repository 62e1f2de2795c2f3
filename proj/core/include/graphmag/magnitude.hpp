#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "graphmag/graph.hpp"
#include "graphmag/integer.hpp"
#include "graphmag/poly_matrix.hpp"
#include "graphmag/rational_function.hpp"
#include "graphmag/series.hpp"

namespace graphmag {

inline constexpr std::size_t kDefaultSeriesOrder = 16;

/// Similarity matrix of a graph: entry (x, y) is q^d(x,y), and 0 when y is
/// unreachable from x. Symmetric with unit diagonal; the identity at q = 0.
class ZMatrix {
 public:
  explicit ZMatrix(const Graph& g);

  std::size_t size() const noexcept { return m_.rows(); }
  const Polynomial& operator()(Vertex x, Vertex y) const { return m_(x, y); }
  const PolyMatrix& matrix() const noexcept { return m_; }

 private:
  PolyMatrix m_;
};

inline ZMatrix z_matrix(const Graph& g) { return ZMatrix(g); }

/// |G| = sm(adj Z) / det Z in canonical form. 0 for the empty graph.
RationalFunction magnitude_rational(const Graph& g);

/// Per-vertex solution of sum_y q^d(x,y) w(y) = 1.
struct Weighting {
  std::vector<RationalFunction> weights;

  RationalFunction total() const;
};

Weighting weighting(const Graph& g);

/// Whether w satisfies the weighting equations of g exactly. Since the
/// weighting is unique, a true result certifies w and its total as the magnitude.
bool verify_weighting(const Graph& g, std::span<const RationalFunction> w);

/// Coefficients c_0..c_order from the alternating-walk expansion
/// sum_k (-1)^k sm(B^k), B the off-diagonal part of Z. Shares no code with the
/// determinant path.
TruncatedSeries magnitude_series_oracle(const Graph& g, std::size_t order);

/// series_from_rational(magnitude_rational(g), order).
TruncatedSeries magnitude_series(const Graph& g, std::size_t order);

enum class MagnitudeSource { GenericMatrix, ClosedForm, SeriesOracle };

struct MagnitudeResult {
  RationalFunction rational;
  std::optional<TruncatedSeries> series;
  MagnitudeSource source = MagnitudeSource::GenericMatrix;
};

/// Rational magnitude from the matrix path, plus its series when `order` is given.
MagnitudeResult compute_magnitude(const Graph& g, std::optional<std::size_t> order = std::nullopt);

/// v(G) / sum_x q^d(x0, x) for a vertex-transitive graph.
/// Throws HypothesisError when g is not vertex-transitive.
RationalFunction vertex_transitive_magnitude(const Graph& g);

/// |G v H| = |G| + |H| - 1.
RationalFunction magnitude_one_point_join(const RationalFunction& mg, const RationalFunction& mh);
/// |G| + |H| - 2/(1+q); valid when H's glued component is bipartite.
RationalFunction magnitude_bipartite_edge_glue(const RationalFunction& mg, const RationalFunction& mh);

/// |G|(1) against the number of components.
struct ValueAtOneReport {
  RationalFunction magnitude;
  std::optional<Rational> value_at_one;  ///< nullopt when q = 1 is a pole
  std::size_t components = 0;

  bool is_pole() const { return !value_at_one.has_value(); }
  bool agrees() const { return value_at_one && *value_at_one == Rational(components); }
};

ValueAtOneReport connected_components_vs_mag_at_1(const Graph& g);

}  // namespace graphmag
