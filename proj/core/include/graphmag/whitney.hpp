#pragma once

#include <optional>
#include <span>
#include <vector>

#include "graphmag/combinators.hpp"
#include "graphmag/distance.hpp"
#include "graphmag/magnitude.hpp"
#include "graphmag/rational_function.hpp"

namespace graphmag {

enum class TwistClass { Plus, Zero, Minus };

/// Data for one side of a twist with adjacent gluing points plus/minus:
/// delta(v) = min(d(v, plus), d(v, minus)), the class of v is the sign of
/// d(v, minus) - d(v, plus), and u_c = sum over class c of q^delta(v) w(v).
struct TwistPartition {
  std::vector<Vertex> vertices;  ///< the side, in the twisted graph's numbering
  std::vector<ExtDistance> delta;
  std::vector<TwistClass> classes;
  RationalFunction u_plus, u_zero, u_minus;
};

/// Partition of `side` (which must contain both gluing points) using the
/// metric of x and the weighting w of x.
/// Throws HypothesisError when plus and minus are not adjacent in x.
TwistPartition twist_partition(const Graph& x, Vertex plus, Vertex minus, std::span<const Vertex> side,
                               const Weighting& w);

/// Candidate weighting of Y built from the weighting of X: unchanged off the
/// gluing points, and at the gluing points
///   w(g+) - u_plus + u_minus,   w(g-) - u_minus + u_plus
/// with the u-sums of G's side. Indexed by Y's vertices.
/// Throws HypothesisError when the gluing points are not adjacent.
Weighting whitney_weight_transform(const TwistPair& pair, const TwistPartition& g_side, const Weighting& w_x);

/// The transform is the same whether computed from G's side or H's side:
/// w(g+) - u^G_+ + u^G_- = w(h-) - u^H_- + u^H_+.
bool twist_sides_agree(const TwistPair& pair, const TwistPartition& g_side, const TwistPartition& h_side,
                       const Weighting& w_x);

struct WhitneyReport {
  TwistPair pair;
  RationalFunction mag_x, mag_y;
  bool adjacent = false;
  bool equal = false;
  bool isomorphic = false;
  /// Present only when the gluing points are adjacent.
  std::optional<bool> sides_agree;
  std::optional<bool> transform_is_weighting;  ///< verify_weighting on Y
  std::optional<bool> transform_total_matches; ///< total equals |X|
};

WhitneyReport check_whitney_twist(const TwistSpec& spec);

}  // namespace graphmag
