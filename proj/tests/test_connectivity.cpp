#include <gtest/gtest.h>

#include "wheelfree/connectivity.hpp"
#include "wheelfree/generate.hpp"
#include "wheelfree/named.hpp"
#include "wheelfree/structure.hpp"

using namespace wheelfree;

TEST(IsKConnected, Examples) {
  EXPECT_TRUE(is_k_connected(named::complete(4), 3));
  EXPECT_FALSE(is_k_connected(named::cycle(5), 3));
  EXPECT_TRUE(is_k_connected(named::cycle(5), 2));
  EXPECT_TRUE(is_k_connected(named::prism(), 3));
  EXPECT_FALSE(is_k_connected(named::butterfly(), 2));
  EXPECT_FALSE(is_k_connected(Graph(3), 1));
  EXPECT_THROW(is_k_connected(named::complete(3), 3), PreconditionError);
  EXPECT_THROW(is_k_connected(named::complete(5), 4), PreconditionError);
  EXPECT_FALSE(is_3_connected(named::complete(3)));
}

TEST(IsKConnected, MinimumDegreeBound) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_gnp(8, 0.5, rng);
    for (int k = 1; k <= 3; ++k)
      if (is_k_connected(g, k)) EXPECT_GE(g.min_degree(), k) << write_graph6(g);
  }
}

TEST(CliqueCutset, Examples) {
  const auto bow = find_clique_cutset(named::butterfly());
  ASSERT_TRUE(bow);
  EXPECT_EQ(bow->clique, std::vector<int>{0});
  EXPECT_EQ(bow->components.size(), 2u);
  EXPECT_EQ(cutset_certificate(*bow), "CUTSET 0");

  EXPECT_FALSE(find_clique_cutset(named::prism()));
  EXPECT_FALSE(find_clique_cutset(named::cycle(5)));
}

TEST(CliqueCutset, SmallestThenLexicographic) {
  // Two triangles sharing edge 1-2, plus a pendant at 3: vertex 3 is not a
  // cut vertex but 0 is (pendant 4 on 0).
  const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  const auto c = find_clique_cutset(g);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->clique, std::vector<int>{0});
  const auto edge_only = find_clique_cutset(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
  ASSERT_TRUE(edge_only);
  EXPECT_EQ(edge_only->clique, (std::vector<int>{1, 2}));
  EXPECT_FALSE(find_clique_cutset(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}), 1));
}

TEST(CliqueCutset, GluedTriangleIsFound) {
  for (const auto& a : seed_catalog())
    for (const auto& b : seed_catalog()) {
      const Triangle t1 = facial_triangles(a.basic).front();
      const Triangle t2 = facial_triangles(b.basic).back();
      const Graph g = glue(a.basic, t1, b.basic, t2).graph;
      const auto c = find_clique_cutset(g);
      ASSERT_TRUE(c) << a.name << '+' << b.name;
      std::vector<int> t(t1.begin(), t1.end());
      std::sort(t.begin(), t.end());
      EXPECT_EQ(c->clique, t) << a.name << '+' << b.name;
      EXPECT_GE(c->components.size(), 2u);
    }
}

TEST(CliqueCutset, WheelsHaveNone) {
  for (int k = 4; k <= 8; ++k) EXPECT_FALSE(find_clique_cutset(named::wheel(k))) << k;
}

TEST(Almost3Connected, Examples) {
  EXPECT_TRUE(std::holds_alternative<ThreeConnected>(is_almost_3_connected(named::complete(4))));
  const auto sub = is_almost_3_connected(subdivide_edge(named::complete(4), Edge(0, 1)));
  ASSERT_TRUE(std::holds_alternative<SubdivisionCase>(sub));
  EXPECT_EQ(std::get<SubdivisionCase>(sub).subdivision_vertex, 4);
  EXPECT_TRUE(std::holds_alternative<NotAlmost3Connected>(is_almost_3_connected(named::cycle(6))));
}

TEST(Almost3Connected, EverySubdividedEdgeOfA3ConnectedGraph) {
  std::vector<Graph> graphs{named::complete(4), named::prism(), named::cube(), named::octahedron(), named::petersen(),
                            named::wheel(6)};
  for (const auto& e : seed_catalog()) graphs.push_back(e.basic);
  for (const Graph& g : graphs) {
    ASSERT_TRUE(is_3_connected(g));
    for (const Edge& e : g.edges())
      EXPECT_TRUE(std::holds_alternative<SubdivisionCase>(is_almost_3_connected(subdivide_edge(g, e))));
  }
}

TEST(TwoCuts, Examples) {
  EXPECT_EQ(two_cuts(named::cycle(4)), (std::vector<std::pair<int, int>>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(two_cuts(named::prism()).empty());
  const auto d = two_cuts(named::diamond());
  EXPECT_NE(std::find(d.begin(), d.end(), std::pair<int, int>{0, 1}), d.end());
  EXPECT_THROW(two_cuts(Graph(3)), PreconditionError);
}
