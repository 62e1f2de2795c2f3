#include "graphmag/metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "graphmag/errors.hpp"

namespace graphmag {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// 2-colouring of the component of `start`; false on an odd cycle.
bool colour_component(const Graph& g, Vertex start, std::vector<int>& colour) {
  std::deque<Vertex> frontier{start};
  colour[start] = 0;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (colour[y] < 0) {
        colour[y] = 1 - colour[x];
        frontier.push_back(y);
      } else if (colour[y] == colour[x]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::size_t> component_ids(const Graph& g) {
  std::vector<std::size_t> id(g.vertex_count(), kNone);
  std::size_t next = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (id[s] != kNone) continue;
    std::deque<Vertex> frontier{s};
    id[s] = next;
    while (!frontier.empty()) {
      Vertex x = frontier.front();
      frontier.pop_front();
      for (Vertex y : g.neighbors(x))
        if (id[y] == kNone) {
          id[y] = next;
          frontier.push_back(y);
        }
    }
    ++next;
  }
  return id;
}

std::size_t component_count(const Graph& g) {
  std::size_t count = 0;
  for (std::size_t id : component_ids(g)) count = std::max(count, id + 1);
  return count;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (colour[v] < 0 && !colour_component(g, v, colour)) return false;
  return true;
}

bool component_is_bipartite(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw InputError("vertex out of range");
  std::vector<int> colour(g.vertex_count(), -1);
  return colour_component(g, v, colour);
}

bool is_convex(const SubgraphSelection& sel) {
  const Graph& host = sel.host();
  const Graph local = sel.as_graph();
  auto verts = sel.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto host_row = distances_from(host, verts[i]);
    auto local_row = distances_from(local, i);
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (host_row[verts[j]] != local_row[j]) return false;
  }
  return true;
}

std::optional<Projection> projection(const SubgraphSelection& target) {
  if (!is_convex(target)) throw HypothesisError("projection target is not a convex subgraph");
  const Graph& host = target.host();
  const DistanceMatrix d = all_pairs_distances(host);
  auto u_set = target.vertices();

  Projection result;
  result.image.assign(host.vertex_count(), std::nullopt);
  for (Vertex x = 0; x < host.vertex_count(); ++x) {
    bool in_ball = false;
    for (Vertex u : u_set) in_ball = in_ball || d(x, u).is_finite();
    if (!in_ball) continue;
    // The gateway, if any, is a nearest vertex of U.
    Vertex nearest = u_set.front();
    for (Vertex u : u_set)
      if (d(x, u) < d(x, nearest)) nearest = u;
    for (Vertex u : u_set)
      if (d(x, u) != d(x, nearest) + d(nearest, u)) return std::nullopt;
    result.image[x] = nearest;
  }
  return result;
}

}  // namespace graphmag
