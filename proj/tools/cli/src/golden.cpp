#include "graphmag_cli/golden.hpp"

#include <algorithm>

#include "graphmag/closed_forms.hpp"
#include "graphmag/combinators.hpp"
#include "graphmag/families.hpp"
#include "graphmag/inclusion_exclusion.hpp"
#include "graphmag/magnitude.hpp"
#include "graphmag/metric.hpp"
#include "graphmag/random_graphs.hpp"
#include "graphmag/whitney.hpp"

namespace graphmag::cli {

namespace {

using RF = RationalFunction;

RF rf(Polynomial num, Polynomial den) { return {std::move(num), std::move(den)}; }

class Suite {
 public:
  Suite(const std::function<void(const GoldenRow&)>& sink, std::uint64_t seed) : sink_(sink), rng_(seed) {}

  bool ok() const { return ok_; }

  void row(int criterion, std::string identity, std::string expected, std::string actual, bool pass) {
    ok_ = ok_ && pass;
    sink_({criterion, std::move(identity), std::move(expected), std::move(actual), pass});
  }

  void equal(int criterion, std::string identity, const RF& expected, const RF& actual) {
    row(criterion, std::move(identity), expected.to_string(), actual.to_string(), expected == actual);
  }

  void differ(int criterion, std::string identity, const RF& a, const RF& b) {
    row(criterion, std::move(identity), "distinct", a == b ? "equal" : "distinct", !(a == b));
  }

  // A property checked on `total` random samples.
  template <class F>
  void sweep(int criterion, std::string identity, int total, F&& sample) {
    int held = 0;
    for (int i = 0; i < total; ++i) held += sample(i) ? 1 : 0;
    const std::string expected = std::to_string(total) + "/" + std::to_string(total);
    row(criterion, std::move(identity), expected, std::to_string(held) + "/" + std::to_string(total), held == total);
  }

  random::Engine& rng() { return rng_; }

 private:
  const std::function<void(const GoldenRow&)>& sink_;
  random::Engine rng_;
  bool ok_ = true;
};

Graph house_b() { return edge_glue(family::cycle(3), {0, 1}, family::cycle(4), {0, 1}); }

Graph connected(std::size_t n, double p, random::Engine& rng) {
  const Graph t = random::tree(n, rng);
  const Graph extra = random::gnp(n, p, rng);
  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  edges.insert(edges.end(), extra.edges().begin(), extra.edges().end());
  return Graph::from_edges(n, edges);
}

std::size_t pick(random::Engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

long c2_count(const Graph& g) {
  const DistanceMatrix d = all_pairs_distances(g);
  long walks = 0;
  long pairs = 0;
  for (Vertex y = 0; y < g.vertex_count(); ++y) walks += static_cast<long>(g.degree(y) * g.degree(y));
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex z = 0; z < g.vertex_count(); ++z) pairs += d(x, z) == ExtDistance(2) ? 1 : 0;
  return walks - pairs;
}

void closed_forms(Suite& s) {
  for (std::size_t n = 1; n <= 8; ++n)
    s.equal(1, "|K" + std::to_string(n) + "|", closed_form::complete(n), magnitude_rational(family::complete(n)));
  for (std::size_t n = 1; n <= 10; ++n)
    s.equal(1, "|C" + std::to_string(n) + "|", closed_form::cycle(n), magnitude_rational(family::cycle(n)));
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n)
      s.equal(1, "|K" + std::to_string(m) + "," + std::to_string(n) + "|", closed_form::complete_bipartite(m, n),
              magnitude_rational(family::complete_bipartite(m, n)));
}

void petersen(Suite& s) {
  const Graph p = family::petersen();
  s.equal(2, "|Petersen|", rf({10}, {1, 3, 6}), magnitude_rational(p));
  const TruncatedSeries expected(4, {10, -30, 30, 90, -450});
  auto text = [](const TruncatedSeries& t) {
    std::string out;
    for (std::size_t k = 0; k <= t.order(); ++k) out += (k ? " " : "") + t[k].get_str();
    return out;
  };
  const TruncatedSeries det = magnitude_series(p, 4);
  const TruncatedSeries walks = magnitude_series_oracle(p, 4);
  s.row(2, "Petersen series to q^4, determinant path", text(expected), text(det), det == expected);
  s.row(2, "Petersen series to q^4, walk expansion", text(expected), text(walks), walks == expected);
}

void w_graph(Suite& s) {
  const Graph w = family::w_graph();
  s.equal(3, "|W|", rf({6}, {1, 4}), magnitude_rational(w));
  const ValueAtOneReport at_one = connected_components_vs_mag_at_1(w);
  const std::string value = at_one.value_at_one ? at_one.value_at_one->get_str() : "pole";
  s.row(3, "|W|(1)", "6/5", value, at_one.value_at_one == Rational(6, 5));
  s.row(3, "k(W)", "1", std::to_string(at_one.components), at_one.components == 1);

  Graph five_w;
  Graph six_k5;
  for (int i = 0; i < 5; ++i) five_w = disjoint_union(five_w, w);
  for (int i = 0; i < 6; ++i) six_k5 = disjoint_union(six_k5, family::complete(5));
  s.equal(3, "|5W|", rf({30}, {1, 4}), magnitude_rational(five_w));
  s.equal(3, "|6K5|", rf({30}, {1, 4}), magnitude_rational(six_k5));
  s.row(3, "k(5W), k(6K5)", "5, 6",
        std::to_string(component_count(five_w)) + ", " + std::to_string(component_count(six_k5)),
        component_count(five_w) == 5 && component_count(six_k5) == 6);
}

void houses(Suite& s) {
  const RF x = magnitude_rational(edge_glue(house_b(), {1, 3}, family::cycle(3), {0, 1}));
  const RF y = magnitude_rational(edge_glue(house_b(), {3, 4}, family::cycle(3), {0, 1}));
  s.equal(4, "|house X|", rf({6, 8, -2}, {1, 4, 5, 2}), x);
  s.equal(4, "|house Y|", rf({6, -4}, {1, 2, 0, -1}), y);
  s.differ(4, "|house X| vs |house Y|", x, y);
}

void two_triangles(Suite& s) {
  const RF x = magnitude_rational(edge_glue(family::cycle(3), {0, 1}, family::cycle(3), {0, 1}));
  const RF naive = RF(2) * magnitude_rational(family::cycle(3)) - magnitude_rational(family::cycle(2));
  s.equal(5, "|two triangles|", rf({4, -2}, {1, 2, -1}), x);
  s.equal(5, "2|C3| - |C2|", rf({4, 2}, {1, 3, 2}), naive);
  s.differ(5, "|two triangles| vs 2|C3| - |C2|", x, naive);
}

void product_vs_bipartite(Suite& s) {
  const RF expected = rf({6}, Polynomial({1, 1}) * Polynomial({1, 2}));
  s.equal(6, "|K2 x K3|", expected, magnitude_rational(cartesian_product(family::complete(2), family::complete(3))));
  s.equal(6, "|K3,3|", expected, magnitude_rational(family::complete_bipartite(3, 3)));
}

void properties(Suite& s) {
  auto& rng = s.rng();
  auto small = [&](std::size_t max_n) { return random::gnp(pick(rng, 0, max_n), 0.15 + 0.1 * static_cast<double>(pick(rng, 0, 5)), rng); };

  s.sweep(7, "|G + H| = |G| + |H|", 200, [&](int) {
    const Graph g = small(5);
    const Graph h = small(5);
    return magnitude_rational(disjoint_union(g, h)) == magnitude_rational(g) + magnitude_rational(h);
  });
  s.sweep(7, "|G x H| = |G| |H|", 200, [&](int) {
    const Graph g = small(6);
    const Graph h = small(6);
    return magnitude_rational(cartesian_product(g, h)) == magnitude_rational(g) * magnitude_rational(h);
  });
  s.sweep(7, "series of |G| = walk expansion to q^12", 200, [&](int) {
    const Graph g = small(10);
    return magnitude_series(g, 12) == magnitude_series_oracle(g, 12);
  });
  s.sweep(7, "|G| invariant under relabelling", 200, [&](int) {
    const Graph g = small(10);
    return magnitude_rational(relabel(g, random::permutation(g.vertex_count(), rng))) == magnitude_rational(g);
  });
  s.sweep(7, "c0 = v, c1 = -2e, c2 = walk count >= 0", 200, [&](int) {
    const Graph g = small(10);
    const TruncatedSeries c = magnitude_series(g, 2);
    const long c2 = c2_count(g);
    return c[0] == static_cast<long>(g.vertex_count()) && c[1] == -2 * static_cast<long>(g.edge_count()) &&
           c[2] == c2 && c2 >= 0;
  });
  s.sweep(7, "weighting solves Zw = 1 and totals |G|", 200, [&](int) {
    const Graph g = small(10);
    const Weighting w = weighting(g);
    return verify_weighting(g, w.weights) && w.total() == magnitude_rational(g);
  });
}

void joins(Suite& s) {
  auto& rng = s.rng();
  s.sweep(8, "|G v H| = |G| + |H| - 1 at every pair of join points", 100, [&](int) {
    const Graph g = random::gnp(pick(rng, 1, 6), 0.4, rng);
    const Graph h = random::gnp(pick(rng, 1, 6), 0.4, rng);
    const RF expected = magnitude_rational(g) + magnitude_rational(h) - RF(1);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      for (Vertex y = 0; y < h.vertex_count(); ++y)
        if (!(magnitude_rational(one_point_join(g, x, h, y)) == expected)) return false;
    return true;
  });
}

void forests(Suite& s) {
  auto& rng = s.rng();
  s.sweep(9, "|forest| = k + e(1-q)/(1+q)", 50, [&](int) {
    const Graph f = random::forest(pick(rng, 1, 15), 0.8, rng);
    return magnitude_rational(f) == closed_form::forest(f.vertex_count(), f.edge_count(), component_count(f));
  });
  s.sweep(9, "|X| = |G| + |H| - |G n H| for subtrees covering a tree", 50, [&](int) {
    const Graph t = random::tree(pick(rng, 1, 15), rng);
    const auto [g, h] = random::subtree_cover(t, rng);
    const InclusionExclusionReport r = check_inclusion_exclusion(t, g, h);
    return r.theorem_applies() && r.identity_holds;
  });
}

void whitney(Suite& s) {
  auto& rng = s.rng();
  s.sweep(10, "Whitney twist across an edge preserves magnitude; transformed weights solve Zw = 1", 100, [&](int) {
    const Graph g = connected(pick(rng, 2, 7), 0.3, rng);
    const Graph h = random::gnp(pick(rng, 2, 7), 0.4, rng);
    const Edge e = g.edges()[pick(rng, 0, g.edge_count() - 1)];
    const Vertex h_plus = pick(rng, 0, h.vertex_count() - 1);
    Vertex h_minus = pick(rng, 0, h.vertex_count() - 2);
    if (h_minus >= h_plus) ++h_minus;
    const WhitneyReport r = check_whitney_twist({g, e.u, e.v, h, h_plus, h_minus});
    return r.adjacent && r.equal && r.sides_agree == true && r.transform_is_weighting == true &&
           r.transform_total_matches == true;
  });
}

void even_cycle_glue(Suite& s) {
  auto& rng = s.rng();
  for (std::size_t len : {4u, 6u}) {
    const Graph cycle = family::cycle(len);
    s.sweep(11, "gluing C" + std::to_string(len) + " onto any edge gives one magnitude", 20, [&](int) {
      const Graph g = connected(pick(rng, 2, 8), 0.3, rng);
      const RF expected = magnitude_bipartite_edge_glue(magnitude_rational(g), magnitude_rational(cycle));
      return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return magnitude_rational(edge_glue(g, {e.u, e.v}, cycle, {0, 1})) == expected;
      });
    });
  }
  const RF x = magnitude_rational(edge_glue(house_b(), {1, 3}, family::cycle(3), {0, 1}));
  const RF y = magnitude_rational(edge_glue(house_b(), {3, 4}, family::cycle(3), {0, 1}));
  s.differ(11, "gluing C3 onto different edges of the house", x, y);
}

}  // namespace

bool run_golden_suite(const std::function<void(const GoldenRow&)>& sink, std::uint64_t seed) {
  Suite s(sink, seed);
  closed_forms(s);
  petersen(s);
  w_graph(s);
  houses(s);
  two_triangles(s);
  product_vs_bipartite(s);
  properties(s);
  joins(s);
  forests(s);
  whitney(s);
  even_cycle_glue(s);
  return s.ok();
}

}  // namespace graphmag::cli
