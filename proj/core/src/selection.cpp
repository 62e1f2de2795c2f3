#include "graphmag/selection.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "graphmag/errors.hpp"

namespace graphmag {

SubgraphSelection::SubgraphSelection(Graph host, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : host_(std::make_shared<const Graph>(std::move(host))),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (auto& e : edges_) e = Edge::of(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  for (Vertex v : vertices_)
    if (v >= host_->vertex_count())
      throw InputError("selected vertex " + std::to_string(v) + " is not a host vertex");
  for (const Edge& e : edges_) {
    if (!host_->has_edge(e.u, e.v))
      throw InputError("selected pair {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} is not a host edge");
    if (!contains(e.u) || !contains(e.v))
      throw InputError("selected edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has an unselected endpoint");
  }
}

SubgraphSelection SubgraphSelection::induced(Graph host, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  for (const Edge& e : host.edges())
    if (std::binary_search(vertices.begin(), vertices.end(), e.u) &&
        std::binary_search(vertices.begin(), vertices.end(), e.v))
      edges.push_back(e);
  return {std::move(host), std::move(vertices), std::move(edges)};
}

SubgraphSelection SubgraphSelection::whole(Graph host) {
  std::vector<Vertex> vertices(host.vertex_count());
  for (Vertex v = 0; v < vertices.size(); ++v) vertices[v] = v;
  std::vector<Edge> edges(host.edges().begin(), host.edges().end());
  return {std::move(host), std::move(vertices), std::move(edges)};
}

bool SubgraphSelection::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SubgraphSelection::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::of(e.u, e.v));
}

std::optional<std::size_t> SubgraphSelection::local_index(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

Graph SubgraphSelection::as_graph() const {
  std::vector<Edge> local;
  local.reserve(edges_.size());
  for (const Edge& e : edges_) local.push_back({*local_index(e.u), *local_index(e.v)});
  return Graph::from_edges(vertices_.size(), local);
}

SubgraphSelection intersect(const SubgraphSelection& a, const SubgraphSelection& b) {
  if (!(a.host() == b.host())) throw InputError("selections have different host graphs");
  std::vector<Vertex> vertices;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                        b.vertices().end(), std::back_inserter(vertices));
  std::vector<Edge> edges;
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                        std::back_inserter(edges));
  return {a.host(), std::move(vertices), std::move(edges)};
}

bool covers_host(const SubgraphSelection& a, const SubgraphSelection& b) {
  const Graph& host = a.host();
  for (Vertex v = 0; v < host.vertex_count(); ++v)
    if (!a.contains(v) && !b.contains(v)) return false;
  for (const Edge& e : host.edges())
    if (!a.contains(e) && !b.contains(e)) return false;
  return true;
}

}  // namespace graphmag
