#include "graphmag/combinators.hpp"

#include <gtest/gtest.h>

#include "graphmag/distance.hpp"
#include "graphmag/errors.hpp"
#include "graphmag/families.hpp"
#include "graphmag/metric.hpp"
#include "graphmag/random_graphs.hpp"
#include "support/oracles.hpp"
#include "support/example_graphs.hpp"

namespace graphmag {
namespace {

using testing::isomorphic;

TEST(DisjointUnion, Examples) {
  EXPECT_EQ(disjoint_union(family::complete(1), family::complete(1)), family::edgeless(2));
  auto cc = disjoint_union(family::cycle(3), family::cycle(3));
  EXPECT_EQ(cc.vertex_count(), 6u);
  EXPECT_EQ(cc.edge_count(), 6u);
  EXPECT_EQ(component_count(cc), 2u);
  EXPECT_TRUE(cc.has_edge(3, 5));

  Graph five_w;
  for (int i = 0; i < 5; ++i) five_w = disjoint_union(five_w, family::w_graph());
  EXPECT_EQ(five_w.vertex_count(), 30u);
  EXPECT_EQ(component_count(five_w), 5u);
}

TEST(DisjointUnion, EmptyGraphIsUnit) {
  auto p = family::petersen();
  EXPECT_EQ(disjoint_union(Graph{}, p), p);
  EXPECT_EQ(disjoint_union(p, Graph{}), p);
}

TEST(CartesianProduct, Examples) {
  EXPECT_TRUE(isomorphic(cartesian_product(family::complete(2), family::complete(2)), family::cycle(4)));
  auto c5 = family::cycle(5);
  EXPECT_EQ(cartesian_product(family::complete(1), c5), c5);
  auto prism = cartesian_product(family::complete(2), family::complete(3));
  EXPECT_EQ(prism.vertex_count(), 6u);
  EXPECT_EQ(prism.edge_count(), 9u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(prism.degree(v), 3u);
  // Two triangles {0,1,2} and {3,4,5} joined by the matching i -- i+3.
  EXPECT_TRUE(prism.has_edge(0, 3));
  EXPECT_TRUE(prism.has_edge(3, 5));
}

TEST(CartesianProductProperty, DistancesAdd) {
  random::Engine rng(61);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int i = 0; i < 40; ++i) {
    Graph g = random::gnp(size(rng), 0.35, rng);
    Graph h = random::gnp(size(rng), 0.35, rng);
    auto dg = all_pairs_distances(g);
    auto dh = all_pairs_distances(h);
    auto dp = all_pairs_distances(cartesian_product(g, h));
    const std::size_t nh = h.vertex_count();
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      for (Vertex y = 0; y < nh; ++y)
        for (Vertex x2 = 0; x2 < g.vertex_count(); ++x2)
          for (Vertex y2 = 0; y2 < nh; ++y2)
            ASSERT_EQ(dp(x * nh + y, x2 * nh + y2), dg(x, x2) + dh(y, y2));
  }
}

TEST(OnePointJoin, Examples) {
  auto k2 = family::complete(2);
  EXPECT_EQ(one_point_join(k2, 0, k2, 0), Graph::from_edge_list(3, {{0, 1}, {0, 2}}));
  EXPECT_TRUE(isomorphic(one_point_join(k2, 0, k2, 0), family::path(3)));
  auto tail = one_point_join(family::cycle(3), 2, k2, 1);
  EXPECT_EQ(tail.vertex_count(), 4u);
  EXPECT_EQ(tail.edge_count(), 4u);
  auto p = family::petersen();
  EXPECT_EQ(one_point_join(family::complete(1), 0, p, 0), p);
  EXPECT_THROW(one_point_join(k2, 2, k2, 0), InputError);
  EXPECT_THROW(one_point_join(k2, 0, k2, 5), InputError);
}

TEST(EdgeGlue, Examples) {
  auto tt = testing::two_triangles();
  EXPECT_EQ(tt.vertex_count(), 4u);
  EXPECT_EQ(tt.edge_count(), 5u);
  auto b = testing::house_b();
  EXPECT_EQ(b.vertex_count(), 5u);
  EXPECT_EQ(b.edge_count(), 6u);
  auto k2 = family::complete(2);
  EXPECT_EQ(edge_glue(k2, {0, 1}, k2, {1, 0}), k2);
  EXPECT_THROW(edge_glue(family::path(3), {0, 2}, k2, {0, 1}), InputError);
  EXPECT_THROW(edge_glue(k2, {0, 1}, family::edgeless(2), {0, 1}), InputError);
}

TEST(EdgeGlue, DeterministicNumbering) {
  // Merged vertices keep the lower index; survivors keep relative order.
  auto g = edge_glue(family::path(3), {1, 2}, family::path(3), {0, 1});
  EXPECT_EQ(g, Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Relabel, Errors) {
  auto c = family::cycle(4);
  std::vector<Vertex> not_perm{0, 0, 1, 2};
  EXPECT_THROW(relabel(c, not_perm), InputError);
  std::vector<Vertex> rotate{1, 2, 3, 0};
  EXPECT_EQ(relabel(c, rotate), c);
}

TEST(WhitneyTwistPair, Houses) {
  auto pair = whitney_twist_pair(testing::houses_twist());
  EXPECT_FALSE(pair.gluing_points_adjacent());
  EXPECT_TRUE(isomorphic(pair.x, testing::house_x()));
  EXPECT_TRUE(isomorphic(pair.y, testing::house_y()));
  EXPECT_FALSE(isomorphic(pair.x, pair.y));
}

TEST(WhitneyTwistPair, TriangleOnHouseGivesTheSameGraphTwice) {
  // Distinguishing an edge of a triangle makes both gluings isomorphic.
  TwistSpec spec{family::cycle(3), 0, 1, testing::house_b(), 1, 3};
  auto pair = whitney_twist_pair(spec);
  EXPECT_TRUE(pair.gluing_points_adjacent());
  EXPECT_TRUE(isomorphic(pair.x, pair.y));
}

TEST(WhitneyTwistPair, SymmetricCases) {
  auto k2 = family::complete(2);
  auto pair = whitney_twist_pair({k2, 0, 1, k2, 0, 1});
  EXPECT_EQ(pair.x, k2);
  EXPECT_EQ(pair.y, k2);

  auto p3 = family::path(3);
  auto paths = whitney_twist_pair({p3, 0, 2, p3, 0, 2});
  EXPECT_TRUE(isomorphic(paths.x, family::cycle(4)));
  EXPECT_TRUE(isomorphic(paths.y, family::cycle(4)));
}

TEST(WhitneyTwistPair, BookkeepingIsConsistent) {
  TwistSpec spec{family::cycle(5), 0, 1, family::path(4), 3, 1};
  auto pair = whitney_twist_pair(spec);
  EXPECT_EQ(pair.x_side_g.size(), 5u);
  EXPECT_EQ(pair.x_side_h.size(), 4u);
  EXPECT_EQ(pair.y_side_g.size(), 5u);
  // x_to_y is a bijection fixing the gluing-point names.
  std::vector<bool> hit(pair.y.vertex_count(), false);
  for (Vertex v : pair.x_to_y) hit.at(v) = true;
  for (bool h : hit) EXPECT_TRUE(h);
  EXPECT_EQ(pair.x_to_y[pair.x_plus], pair.y_plus);
  EXPECT_EQ(pair.x_to_y[pair.x_minus], pair.y_minus);
  EXPECT_THROW(whitney_twist_pair({family::cycle(3), 1, 1, family::cycle(3), 0, 1}), InputError);
  EXPECT_THROW(whitney_twist_pair({family::cycle(3), 0, 3, family::cycle(3), 0, 1}), InputError);
}

TEST(WhitneyTwistPairProperty, SameCounts) {
  random::Engine rng(62);
  std::uniform_int_distribution<std::size_t> size(2, 7);
  for (int i = 0; i < 100; ++i) {
    Graph g = random::gnp(size(rng), 0.5, rng);
    Graph h = random::gnp(size(rng), 0.5, rng);
    auto pick = [&](const Graph& gr) {
      auto perm = random::permutation(gr.vertex_count(), rng);
      return std::pair{perm[0], perm[1]};
    };
    auto [gp, gm] = pick(g);
    auto [hp, hm] = pick(h);
    auto pair = whitney_twist_pair({g, gp, gm, h, hp, hm});
    EXPECT_EQ(pair.x.vertex_count(), pair.y.vertex_count());
    EXPECT_EQ(pair.x.edge_count(), pair.y.edge_count());
    EXPECT_EQ(component_count(pair.x), component_count(pair.y));
    EXPECT_EQ(pair.gluing_points_adjacent(), pair.y.has_edge(pair.y_plus, pair.y_minus));
  }
}

}  // namespace
}  // namespace graphmag
