#pragma once

#include <span>
#include <utility>
#include <vector>

#include "graphmag/graph.hpp"

namespace graphmag {

// Vertex identification rule shared by every gluing operation below: a merged
// pair keeps the lower of its two indices (in disjoint-union numbering), and
// the surviving vertices are renumbered preserving their relative order.

/// G's vertices first, then H's shifted by v(G). The empty graph is the unit.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Vertex (x, y) has index x * v(H) + y.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Identify x in G with y in H. Throws InputError when either is out of range.
Graph one_point_join(const Graph& g, Vertex x, const Graph& h, Vertex y);

/// Identify the oriented edge (a, b) of G with the oriented edge (c, d) of H:
/// a with c and b with d; the doubled edge is merged.
/// Throws InputError when either pair is not an edge.
Graph edge_glue(const Graph& g, std::pair<Vertex, Vertex> eg, const Graph& h,
                std::pair<Vertex, Vertex> eh);

/// Identify vertex pairs (given in the numbering of `g`) and renumber.
/// `old_to_new`, when given, receives the new index of every old vertex.
Graph identify_vertices(const Graph& g, std::span<const std::pair<Vertex, Vertex>> merges,
                        std::vector<Vertex>* old_to_new = nullptr);

/// Image of g under the vertex permutation v -> perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Doubly-pointed graphs (G, g+, g-) and (H, h+, h-) for a Whitney twist.
struct TwistSpec {
  Graph g;
  Vertex g_plus = 0;
  Vertex g_minus = 1;
  Graph h;
  Vertex h_plus = 0;
  Vertex h_minus = 1;
};

/// X glues g+ to h+ and g- to h-; Y glues g+ to h- and g- to h+.
/// Vertex names follow G: in both graphs `plus` is the vertex containing g+.
struct TwistPair {
  Graph x;
  Graph y;
  Vertex x_plus = 0;  ///< g+ = h+ in X
  Vertex x_minus = 0; ///< g- = h- in X
  Vertex y_plus = 0;  ///< g+ = h- in Y
  Vertex y_minus = 0; ///< g- = h+ in Y
  /// Vertices of X (resp. Y) coming from G and from H, ascending.
  std::vector<Vertex> x_side_g, x_side_h, y_side_g, y_side_h;
  /// Canonical bijection V(X) -> V(Y): identity on origins, x_plus -> y_plus,
  /// x_minus -> y_minus.
  std::vector<Vertex> x_to_y;

  bool gluing_points_adjacent() const { return x.has_edge(x_plus, x_minus); }
};

/// Throws InputError if g+ == g-, h+ == h-, or any point is out of range.
TwistPair whitney_twist_pair(const TwistSpec& spec);

}  // namespace graphmag
