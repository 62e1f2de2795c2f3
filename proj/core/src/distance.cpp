#include "graphmag/distance.hpp"

#include <algorithm>
#include <deque>

namespace graphmag {

std::uint32_t DistanceMatrix::max_finite() const {
  std::uint32_t best = 0;
  for (ExtDistance d : d_)
    if (d.is_finite()) best = std::max(best, d.value());
  return best;
}

std::vector<ExtDistance> distances_from(const Graph& g, Vertex source) {
  std::vector<ExtDistance> dist(g.vertex_count(), ExtDistance::unreachable());
  std::deque<Vertex> frontier{source};
  dist.at(source) = ExtDistance(0);
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop_front();
    const ExtDistance next = dist[x] + ExtDistance(1);
    for (Vertex y : g.neighbors(x)) {
      if (dist[y].is_finite()) continue;
      dist[y] = next;
      frontier.push_back(y);
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  for (Vertex x = 0; x < n; ++x) {
    auto row = distances_from(g, x);
    for (Vertex y = 0; y < n; ++y) d(x, y) = row[y];
  }
  return d;
}

}  // namespace graphmag
