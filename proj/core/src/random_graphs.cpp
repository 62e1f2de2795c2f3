#include "graphmag/random_graphs.hpp"

#include <algorithm>
#include <numeric>

#include "graphmag/errors.hpp"

namespace graphmag::random {

Graph gnp(std::size_t n, double p, Engine& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

Graph tree(std::size_t n, Engine& rng) {
  if (n == 0) throw InputError("a tree needs at least one vertex");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) return Graph::from_edge_list(2, {{0, 1}});
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> pruefer(n - 2);
  for (auto& v : pruefer) v = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : pruefer) ++degree[v];
  std::vector<Edge> edges;
  for (Vertex v : pruefer) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back(Edge::of(leaf, v));
    --degree[leaf];
    --degree[v];
  }
  Vertex a = n;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (a == n) {
        a = v;
      } else {
        edges.push_back(Edge::of(a, v));
        break;
      }
    }
  return Graph::from_edges(n, edges);
}

Graph forest(std::size_t n, double keep, Engine& rng) {
  if (n == 0) return {};
  Graph t = tree(n, rng);
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> edges;
  for (const Edge& e : t.edges())
    if (coin(rng)) edges.push_back(e);
  return Graph::from_edges(n, edges);
}

std::vector<Vertex> permutation(std::size_t n, Engine& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

namespace {

// Smallest subtree of `t` containing `keep`: prune non-kept leaves until none remain.
std::vector<Vertex> steiner_subtree(const Graph& t, const std::vector<bool>& keep) {
  const std::size_t n = t.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = t.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v] || keep[v] || deg[v] > 1) continue;
      alive[v] = false;
      changed = true;
      for (Vertex w : t.neighbors(v))
        if (alive[w]) --deg[w];
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) out.push_back(v);
  return out;
}

}  // namespace

std::pair<SubgraphSelection, SubgraphSelection> subtree_cover(const Graph& t, Engine& rng) {
  const std::size_t n = t.vertex_count();
  if (n == 0) throw InputError("cannot cover the empty graph");
  std::uniform_int_distribution<Vertex> pick(0, n - 1);

  // G: grow a connected vertex set from a random root.
  std::vector<bool> in_g(n, false);
  std::vector<Vertex> g_vertices{pick(rng)};
  in_g[g_vertices.front()] = true;
  std::uniform_int_distribution<std::size_t> size_dist(1, n);
  const std::size_t target = size_dist(rng);
  while (g_vertices.size() < target) {
    std::vector<Vertex> frontier;
    for (Vertex v : g_vertices)
      for (Vertex w : t.neighbors(v))
        if (!in_g[w]) frontier.push_back(w);
    if (frontier.empty()) break;
    Vertex next = frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)];
    if (in_g[next]) continue;
    in_g[next] = true;
    g_vertices.push_back(next);
  }

  // H must cover every vertex and edge that G misses.
  std::vector<bool> need(n, false);
  bool any = false;
  for (Vertex v = 0; v < n; ++v)
    if (!in_g[v]) need[v] = any = true;
  for (const Edge& e : t.edges())
    if (!in_g[e.u] || !in_g[e.v]) need[e.u] = need[e.v] = true;
  if (!any) need[pick(rng)] = true;
  // Occasionally widen the overlap.
  if (std::bernoulli_distribution(0.5)(rng)) need[pick(rng)] = true;

  return {SubgraphSelection::induced(t, g_vertices),
          SubgraphSelection::induced(t, steiner_subtree(t, need))};
}

}  // namespace graphmag::random
