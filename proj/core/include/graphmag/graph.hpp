#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphmag {

using Vertex = std::size_t;

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Orders the endpoints; does not validate them.
  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted and de-duplicated; adjacency lists are sorted.
/// Labels are display strings only and never affect any computation.
class Graph {
 public:
  /// The empty graph (no vertices).
  Graph() = default;

  /// Throws InputError for an out-of-range endpoint or a self-loop.
  /// Duplicate pairs collapse to one edge.
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs,
                              std::vector<std::string> labels = {});
  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  /// Explicit label if one was given, otherwise the decimal index.
  std::string label(Vertex v) const;
  bool has_labels() const noexcept { return !labels_.empty(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

/// Edge-list text format: first non-comment line "n <count>", then one
/// "<u> <v>" pair per line, 0-based; '#' starts a comment. Throws InputError
/// with a line number on malformed input.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

}  // namespace graphmag
