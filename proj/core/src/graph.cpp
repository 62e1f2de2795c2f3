#include "graphmag/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "graphmag/errors.hpp"

namespace graphmag {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) throw InputError("label count does not match vertex count");
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has an endpoint outside [0, " + std::to_string(n) + ")");
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(Edge::of(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs,
                            std::vector<std::string> labels) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back(Edge{a, b});
  return from_edges(n, edges, std::move(labels));
}

Graph Graph::from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::string Graph::label(Vertex v) const {
  if (v >= vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n")
        throw InputError("line " + std::to_string(line_no) + ": expected header 'n <vertex_count>'");
      n = parse_index(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 2)
      throw InputError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
    Vertex u = parse_index(tokens[0], line_no);
    Vertex v = parse_index(tokens[1], line_no);
    if (u >= *n || v >= *n)
      throw InputError("line " + std::to_string(line_no) + ": vertex out of range");
    if (u == v) throw InputError("line " + std::to_string(line_no) + ": self-loop");
    edges.push_back(Edge{u, v});
  }
  if (!n) throw InputError("missing header 'n <vertex_count>'");
  return Graph::from_edges(*n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge-list file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_edge_list(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace graphmag
