#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphmag/distance.hpp"
#include "graphmag/graph.hpp"
#include "graphmag/selection.hpp"

namespace graphmag {

/// Number of connected components; 0 for the empty graph.
std::size_t component_count(const Graph& g);
/// Component id per vertex, numbered in order of first appearance.
std::vector<std::size_t> component_ids(const Graph& g);

bool is_bipartite(const Graph& g);
/// Whether the component containing v is bipartite.
bool component_is_bipartite(const Graph& g, Vertex v);

/// Whether the selection's own shortest-path metric agrees with the host's on
/// every pair of selected vertices, Unreachable included.
bool is_convex(const SubgraphSelection& sel);

/// Nearest-point map of a host graph onto a convex subgraph U, defined on the
/// vertices at finite distance from U.
struct Projection {
  /// Indexed by host vertex; nullopt outside the finite-distance ball of U.
  std::vector<std::optional<Vertex>> image;
};

/// The projection of target.host() onto `target`, or nullopt when some vertex
/// x of the ball has no u* in U with d(x,u) = d(x,u*) + d(u*,u) for all u in U.
/// Throws HypothesisError if `target` is not convex.
std::optional<Projection> projection(const SubgraphSelection& target);

/// True iff the automorphism group acts transitively on the vertices.
/// Backtracking search pruned by degree and distance profiles; meant for
/// small graphs.
bool is_vertex_transitive(const Graph& g);

/// Some automorphism of g maps `from` to `to`.
bool has_automorphism_mapping(const Graph& g, Vertex from, Vertex to);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace graphmag
