#include <gtest/gtest.h>

#include <sstream>

#include "wheelfree/generate.hpp"
#include "wheelfree/isomorphism.hpp"
#include "wheelfree/linegraph.hpp"
#include "wheelfree/named.hpp"
#include "wheelfree/oracle.hpp"
#include "wheelfree/structure.hpp"

using namespace wheelfree;

namespace {

Graph basic_of(const Graph& cubic) { return line_graph(subdivide_all(cubic)).graph; }

Graph glued_prisms() {
  const Graph p = named::prism();
  return glue(p, {0, 1, 2}, p, {3, 4, 5}).graph;
}

bool iso(const Graph& a, const Graph& b) {
  return is_isomorphic(a, b, {std::max({16, a.vertex_count(), b.vertex_count()})});
}

}  // namespace

TEST(BasicByDefinition, Examples) {
  const BasicVerdict prism = is_basic_by_definition(named::prism());
  ASSERT_TRUE(prism.is_basic);
  EXPECT_EQ(prism.realization->kind, BasicKind::k23);
  EXPECT_TRUE(iso(prism.realization->root.root, named::complete_bipartite(2, 3)));

  const Graph lk4 = basic_of(named::complete(4));
  const BasicVerdict k4 = is_basic_by_definition(lk4);
  ASSERT_TRUE(k4.is_basic);
  EXPECT_EQ(k4.realization->kind, BasicKind::subdivided_cubic);
  EXPECT_TRUE(iso(k4.realization->cubic, named::complete(4)));
  EXPECT_TRUE(replay_realization(lk4, *k4.realization));

  const BasicVerdict no = is_basic_by_definition(named::complete(4));
  EXPECT_FALSE(no.is_basic);
  EXPECT_FALSE(no.reason.empty());
}

TEST(BasicByDefinition, RejectsNonPlanarAndNon3ConnectedRoots) {
  EXPECT_FALSE(is_basic_by_definition(basic_of(named::complete_bipartite(3, 3))).is_basic);
  EXPECT_FALSE(is_basic_by_definition(basic_of(named::petersen())).is_basic);
  // Two K4s joined by two edges: cubic, planar, only 2-connected.
  Graph twin(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}, {0, 4}, {3, 7}});
  EXPECT_FALSE(is_basic_by_definition(basic_of(twin)).is_basic);
  EXPECT_FALSE(is_basic_by_definition(named::cycle(6)).is_basic);
  EXPECT_FALSE(is_basic_by_definition(Graph(0)).is_basic);
}

TEST(BasicByCharacterization, Examples) {
  EXPECT_TRUE(is_basic_by_characterization(named::prism()));
  EXPECT_FALSE(is_basic_by_characterization(named::complete(4)));
  EXPECT_FALSE(is_basic_by_characterization(named::cube()));
  EXPECT_TRUE(find_pattern(named::cube(), PatternKind::claw));
}

TEST(BasicByClass, Examples) {
  EXPECT_EQ(is_basic_by_class(named::prism()), Tristate::yes);
  EXPECT_EQ(is_basic_by_class(named::wheel(5)), Tristate::no);
  EXPECT_EQ(is_basic_by_class(basic_of(named::cube())), Tristate::yes);
  EXPECT_EQ(is_basic_by_class(glued_prisms()), Tristate::no);
  EXPECT_EQ(is_basic_by_class(basic_of(named::cube()), {std::chrono::milliseconds(0), 1}), Tristate::unknown);
}

TEST(BasicTests, AgreeOnRandomSmallGraphs) {
  Rng rng(61);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_gnp(uniform_int(rng, 1, 10), uniform_int(rng, 2, 7) / 10.0, rng);
    const bool def = is_basic_by_definition(g).is_basic;
    const bool chr = is_basic_by_characterization(g);
    const Tristate cls = is_basic_by_class(g);
    ASSERT_NE(cls, Tristate::unknown);
    EXPECT_EQ(def, chr) << write_graph6(g);
    EXPECT_EQ(def, cls == Tristate::yes) << write_graph6(g);
  }
}

TEST(BasicTests, AgreeOnAllSmallClassCandidates) {
  // Every 3-connected planar graph up to 7 vertices.
  for (int n = 4; n <= 7; ++n)
    for (const Graph& g : oracle::enumerate_connected_graphs(n)) {
      const bool def = is_basic_by_definition(g).is_basic;
      EXPECT_EQ(def, is_basic_by_characterization(g)) << write_graph6(g);
      EXPECT_EQ(def, is_basic_by_class(g) == Tristate::yes) << write_graph6(g);
    }
}

TEST(Glue, PrismPlusPrism) {
  const Graph g = glued_prisms();
  EXPECT_EQ(g.vertex_count(), 9);
  EXPECT_EQ(in_class(g), Tristate::yes);
  const auto cut = find_clique_cutset(g);
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->clique, (std::vector<int>{0, 1, 2}));
}

TEST(Glue, Numbering) {
  const Graph p = named::prism();
  const GlueResult r = glue(p, {0, 1, 2}, p, {5, 3, 4});
  EXPECT_EQ(r.second_map, (std::vector<int>{6, 7, 8, 1, 2, 0}));
  for (int v = 0; v < 6; ++v)
    for (int w = v + 1; w < 6; ++w) EXPECT_EQ(p.has_edge(v, w), r.graph.has_edge(r.second_map[v], r.second_map[w]));
}

TEST(Glue, Preconditions) {
  const Graph p = named::prism();
  // K4 with a vertex stacked into each face: {0,1,2} separates.
  Graph stacked(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const Triangle fs[4] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int i = 0; i < 4; ++i)
    for (int v : fs[i]) stacked.add_edge(v, 4 + i);
  EXPECT_THROW(glue(stacked, {0, 1, 2}, p, {0, 1, 2}), PreconditionError);
  EXPECT_NO_THROW(glue(stacked, {0, 1, 4}, p, {0, 1, 2}));
  EXPECT_THROW(glue(p, {0, 1, 3}, p, {0, 1, 2}), PreconditionError);
  EXPECT_THROW(glue(named::cycle(3), {0, 1, 2}, p, {0, 1, 2}), PreconditionError);
  EXPECT_THROW(glue(p, {0, 1, 9}, p, {0, 1, 2}), PreconditionError);
}

TEST(Glue, ClassIsClosedUnderPairwiseGluing) {
  const auto cat = seed_catalog();
  for (const auto& a : cat)
    for (const auto& b : cat)
      for (const Triangle& t : facial_triangles(a.basic)) {
        const Graph g = glue(a.basic, t, b.basic, facial_triangles(b.basic).front()).graph;
        EXPECT_EQ(in_class(g), Tristate::yes) << a.name << '+' << b.name;
        EXPECT_TRUE(oracle::chromatic_number_bf(g) <= 3 || g.vertex_count() > 40);
      }
}

TEST(Decompose, PrismIsALeaf) {
  const DecompositionTree t = decompose(named::prism());
  EXPECT_EQ(t.leaf_count(), 1);
  EXPECT_EQ(t.nodes.size(), 1u);
  EXPECT_EQ(replay(t), named::prism());
}

TEST(Decompose, GluedPrismsGiveTwoLeaves) {
  const Graph g = glued_prisms();
  const DecompositionTree t = decompose(g);
  EXPECT_EQ(t.leaf_count(), 2);
  EXPECT_EQ(t.nodes.size(), 3u);
  for (const auto& nd : t.nodes)
    if (nd.kind == DecompositionNode::Kind::leaf) EXPECT_TRUE(iso(nd.graph, named::prism()));
  EXPECT_TRUE(iso(replay(t), g));
}

TEST(Decompose, VertexMapIsAnIsomorphism) {
  for (int seed = 0; seed < 10; ++seed) {
    const Graph g = generate_member(seed_catalog(), {"K4", "prism", "cube", "K23"}, 3, seed);
    const DecompositionTree t = decompose(g);
    const Graph r = replay(t);
    ASSERT_EQ(r.vertex_count(), g.vertex_count());
    for (int u = 0; u < r.vertex_count(); ++u)
      for (int v = u + 1; v < r.vertex_count(); ++v)
        EXPECT_EQ(r.has_edge(u, v), g.has_edge(t.vertex_map[u], t.vertex_map[v]));
    EXPECT_EQ(t.leaf_count(), 4);
  }
}

TEST(Decompose, ThreePieceChain) {
  const Graph p = named::prism();
  const Graph two = glue(p, {0, 1, 2}, p, {0, 1, 2}).graph;
  const Graph three = glue(two, {3, 4, 5}, p, {0, 1, 2}).graph;
  const DecompositionTree t = decompose(three);
  EXPECT_EQ(t.leaf_count(), 3);
  EXPECT_TRUE(iso(replay(t), three));
}

TEST(Decompose, RejectsOutOfClassInputs) {
  EXPECT_THROW(decompose(named::complete(4)), PreconditionError);
  EXPECT_THROW(decompose(named::cycle(5)), PreconditionError);
  EXPECT_THROW(decompose(named::complete(5)), PreconditionError);
  EXPECT_THROW(decompose(basic_of(named::cube()), {{std::chrono::milliseconds(0), 1}}), BudgetExceeded);
}

TEST(Decompose, JsonRoundTrip) {
  const Graph g = generate_member(seed_catalog(), {"K4", "K23"}, 2, 5);
  const DecompositionTree t = decompose(g);
  const nlohmann::json j = tree_to_json(t);
  EXPECT_EQ(j.at("format"), "wheelfree-decomposition");
  const DecompositionTree back = tree_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(replay(back), replay(t));
  EXPECT_EQ(back.vertex_map, t.vertex_map);
  EXPECT_THROW(tree_from_json(nlohmann::json{{"format", "other"}}), ParseError);
  EXPECT_THROW(tree_from_json(nlohmann::json{{"format", "wheelfree-decomposition"}}), ParseError);
}

TEST(Catalog, Seeds) {
  const auto cat = seed_catalog();
  EXPECT_EQ(catalog_lookup(cat, "K4").basic.vertex_count(), 12);
  EXPECT_TRUE(iso(catalog_lookup(cat, "K23").basic, named::prism()));
  EXPECT_EQ(catalog_lookup(cat, "prism").basic.vertex_count(), 18);
  EXPECT_EQ(catalog_lookup(cat, "cube").basic.vertex_count(), 24);
  for (const auto& e : cat) EXPECT_TRUE(is_basic_by_definition(e.basic).is_basic) << e.name;
  EXPECT_THROW(catalog_lookup(cat, "dodecahedron"), PreconditionError);
}

TEST(Catalog, Import) {
  std::istringstream in(write_graph6(named::cube()) + "\n" + write_graph6(named::complete(4)) + "\n");
  const auto extra = import_catalog(in, "x");
  ASSERT_EQ(extra.size(), 2u);
  EXPECT_EQ(extra[0].name, "x0");
  EXPECT_EQ(extra[1].basic.vertex_count(), 12);
  std::istringstream bad(write_graph6(named::octahedron()) + "\n");
  EXPECT_THROW(import_catalog(bad), PreconditionError);
}
