#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "graphmag/graph.hpp"

namespace graphmag {

/// A subgraph of a host graph given by explicit vertex and edge subsets.
/// Edges are explicit (not induced) so that two parts of a decomposition can
/// share an edge, or leave out one between shared vertices.
class SubgraphSelection {
 public:
  /// Throws InputError if a vertex is out of range, an edge is not a host
  /// edge, or an edge has an endpoint outside `vertices`.
  SubgraphSelection(Graph host, std::vector<Vertex> vertices, std::vector<Edge> edges);

  static SubgraphSelection induced(Graph host, std::vector<Vertex> vertices);
  static SubgraphSelection whole(Graph host);

  const Graph& host() const noexcept { return *host_; }
  /// Ascending host indices.
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool contains(Vertex v) const;
  bool contains(const Edge& e) const;

  /// Position of host vertex v among vertices(), if selected.
  std::optional<std::size_t> local_index(Vertex v) const;
  /// The selection as a graph on its own; vertex i is host vertex vertices()[i].
  Graph as_graph() const;

 private:
  std::shared_ptr<const Graph> host_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Vertex- and edge-wise intersection. Both must share the same host graph.
SubgraphSelection intersect(const SubgraphSelection& a, const SubgraphSelection& b);
/// True when the vertex and edge sets of a and b together cover the host.
bool covers_host(const SubgraphSelection& a, const SubgraphSelection& b);

}  // namespace graphmag
