#include "graphmag/combinators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphmag/errors.hpp"

namespace graphmag {

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t offset = g.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.push_back({e.u + offset, e.v + offset});
  return Graph::from_edges(offset + h.vertex_count(), edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * nh + h.edge_count() * ng);
  for (Vertex x = 0; x < ng; ++x)
    for (const Edge& e : h.edges()) edges.push_back({x * nh + e.u, x * nh + e.v});
  for (const Edge& e : g.edges())
    for (Vertex y = 0; y < nh; ++y) edges.push_back({e.u * nh + y, e.v * nh + y});
  return Graph::from_edges(ng * nh, edges);
}

Graph identify_vertices(const Graph& g, std::span<const std::pair<Vertex, Vertex>> merges,
                        std::vector<Vertex>* old_to_new) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : merges) {
    if (a >= n || b >= n) throw InputError("identified vertex out of range");
    Vertex ra = find(a);
    Vertex rb = find(b);
    if (ra == rb) continue;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
  std::vector<Vertex> rank(n, 0);
  std::size_t survivors = 0;
  for (Vertex v = 0; v < n; ++v)
    if (find(v) == v) rank[v] = survivors++;
  std::vector<Vertex> mapping(n);
  for (Vertex v = 0; v < n; ++v) mapping[v] = rank[find(v)];

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    Vertex a = mapping[e.u];
    Vertex b = mapping[e.v];
    if (a == b) throw InputError("identifying the endpoints of an edge would create a self-loop");
    edges.push_back(Edge::of(a, b));
  }
  if (old_to_new) *old_to_new = mapping;
  return Graph::from_edges(survivors, edges);
}

Graph one_point_join(const Graph& g, Vertex x, const Graph& h, Vertex y) {
  if (x >= g.vertex_count() || y >= h.vertex_count())
    throw InputError("join vertex out of range");
  const std::pair<Vertex, Vertex> merge{x, g.vertex_count() + y};
  return identify_vertices(disjoint_union(g, h), std::span(&merge, 1));
}

Graph edge_glue(const Graph& g, std::pair<Vertex, Vertex> eg, const Graph& h,
                std::pair<Vertex, Vertex> eh) {
  if (!g.has_edge(eg.first, eg.second))
    throw InputError("(" + std::to_string(eg.first) + "," + std::to_string(eg.second) +
                     ") is not an edge of the first graph");
  if (!h.has_edge(eh.first, eh.second))
    throw InputError("(" + std::to_string(eh.first) + "," + std::to_string(eh.second) +
                     ") is not an edge of the second graph");
  const std::size_t offset = g.vertex_count();
  const std::pair<Vertex, Vertex> merges[] = {{eg.first, offset + eh.first},
                                              {eg.second, offset + eh.second}};
  return identify_vertices(disjoint_union(g, h), merges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw InputError("permutation size does not match vertex count");
  std::vector<bool> seen(n, false);
  for (Vertex v : perm) {
    if (v >= n || seen[v]) throw InputError("not a permutation");
    seen[v] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back(Edge::of(perm[e.u], perm[e.v]));
  return Graph::from_edges(n, edges);
}

namespace {

std::vector<Vertex> image_of_range(const std::vector<Vertex>& mapping, std::size_t begin, std::size_t end) {
  std::vector<Vertex> out(mapping.begin() + static_cast<std::ptrdiff_t>(begin),
                          mapping.begin() + static_cast<std::ptrdiff_t>(end));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TwistPair whitney_twist_pair(const TwistSpec& spec) {
  const std::size_t ng = spec.g.vertex_count();
  const std::size_t nh = spec.h.vertex_count();
  if (spec.g_plus >= ng || spec.g_minus >= ng || spec.h_plus >= nh || spec.h_minus >= nh)
    throw InputError("distinguished vertex out of range");
  if (spec.g_plus == spec.g_minus || spec.h_plus == spec.h_minus)
    throw InputError("distinguished vertices of each graph must be distinct");

  const Graph both = disjoint_union(spec.g, spec.h);
  const std::pair<Vertex, Vertex> x_merges[] = {{spec.g_plus, ng + spec.h_plus},
                                                {spec.g_minus, ng + spec.h_minus}};
  const std::pair<Vertex, Vertex> y_merges[] = {{spec.g_plus, ng + spec.h_minus},
                                                {spec.g_minus, ng + spec.h_plus}};
  std::vector<Vertex> to_x;
  std::vector<Vertex> to_y;
  TwistPair out;
  out.x = identify_vertices(both, x_merges, &to_x);
  out.y = identify_vertices(both, y_merges, &to_y);
  out.x_plus = to_x[spec.g_plus];
  out.x_minus = to_x[spec.g_minus];
  out.y_plus = to_y[spec.g_plus];
  out.y_minus = to_y[spec.g_minus];
  out.x_side_g = image_of_range(to_x, 0, ng);
  out.x_side_h = image_of_range(to_x, ng, ng + nh);
  out.y_side_g = image_of_range(to_y, 0, ng);
  out.y_side_h = image_of_range(to_y, ng, ng + nh);

  // G's copies of the gluing points come first, so they fix the bijection there.
  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  out.x_to_y.assign(out.x.vertex_count(), kUnset);
  for (Vertex old = 0; old < ng + nh; ++old) {
    if (out.x_to_y[to_x[old]] == kUnset) out.x_to_y[to_x[old]] = to_y[old];
  }
  return out;
}

}  // namespace graphmag
