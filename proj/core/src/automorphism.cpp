#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

#include "graphmag/errors.hpp"
#include "graphmag/metric.hpp"

namespace graphmag {

namespace {

// Distance-preserving bijections from a onto b, built one vertex at a time.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), da_(all_pairs_distances(a)), db_(all_pairs_distances(b)),
        profile_a_(profiles(da_, a.vertex_count())), profile_b_(profiles(db_, b.vertex_count())) {}

  bool maps(Vertex from, Vertex to) {
    if (profile_a_[from] != profile_b_[to]) return false;
    order_ = search_order(from);
    image_.assign(a_.vertex_count(), kUnset);
    used_.assign(b_.vertex_count(), false);
    image_[from] = to;
    used_[to] = true;
    return extend(1);
  }

 private:
  static constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();

  static std::vector<std::vector<ExtDistance>> profiles(const DistanceMatrix& d, std::size_t n) {
    std::vector<std::vector<ExtDistance>> out(n);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = 0; w < n; ++w) out[v].push_back(d(v, w));
      std::sort(out[v].begin(), out[v].end());
    }
    return out;
  }

  // BFS order from `from`, then the remaining components, so that each vertex
  // after the first in its component has an already-placed neighbour.
  std::vector<Vertex> search_order(Vertex from) const {
    std::vector<Vertex> order;
    std::vector<bool> seen(a_.vertex_count(), false);
    auto bfs = [&](Vertex s) {
      std::deque<Vertex> frontier{s};
      seen[s] = true;
      while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop_front();
        order.push_back(x);
        for (Vertex y : a_.neighbors(x))
          if (!seen[y]) {
            seen[y] = true;
            frontier.push_back(y);
          }
      }
    };
    bfs(from);
    for (Vertex v = 0; v < a_.vertex_count(); ++v)
      if (!seen[v]) bfs(v);
    return order;
  }

  bool consistent(Vertex v, Vertex candidate) const {
    if (used_[candidate] || profile_a_[v] != profile_b_[candidate]) return false;
    for (Vertex w : order_) {
      if (image_[w] == kUnset) continue;
      if (da_(v, w) != db_(candidate, image_[w])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex c = 0; c < b_.vertex_count(); ++c) {
      if (!consistent(v, c)) continue;
      image_[v] = c;
      used_[c] = true;
      if (extend(depth + 1)) return true;
      image_[v] = kUnset;
      used_[c] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  DistanceMatrix da_, db_;
  std::vector<std::vector<ExtDistance>> profile_a_, profile_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

bool has_automorphism_mapping(const Graph& g, Vertex from, Vertex to) {
  if (from >= g.vertex_count() || to >= g.vertex_count()) throw InputError("vertex out of range");
  IsomorphismSearch search(g, g);
  return search.maps(from, to);
}

bool is_vertex_transitive(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  IsomorphismSearch search(g, g);
  for (Vertex y = 1; y < g.vertex_count(); ++y) {
    if (!search.maps(0, y)) return false;
  }
  return true;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.vertex_count() == 0) return true;
  IsomorphismSearch search(a, b);
  for (Vertex y = 0; y < b.vertex_count(); ++y)
    if (search.maps(0, y)) return true;
  return false;
}

}  // namespace graphmag
