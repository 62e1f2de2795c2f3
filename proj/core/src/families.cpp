#include "graphmag/families.hpp"

#include <string>
#include <vector>

#include "graphmag/errors.hpp"

namespace graphmag::family {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Graph complete(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  require(n >= 1, "cycle graph needs n >= 1");
  std::vector<Edge> edges;
  if (n == 2) edges.push_back({0, 1});
  if (n >= 3)
    for (Vertex i = 0; i < n; ++i) edges.push_back(Edge::of(i, (i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph edgeless(std::size_t n) { return Graph::from_edges(n, {}); }

Graph complete_bipartite(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < n; ++j) edges.push_back({i, m + j});
  return Graph::from_edges(m + n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(Edge::of(i, (i + 1) % 5));
    edges.push_back(Edge::of(5 + i, 5 + (i + 2) % 5));
    edges.push_back({i, 5 + i});
  }
  return Graph::from_edges(10, edges);
}

Graph w_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 6; ++i)
    for (Vertex j = i + 1; j < 6; ++j)
      if (j >= 3) edges.push_back({i, j});
  return Graph::from_edges(6, edges);
}

}  // namespace graphmag::family
