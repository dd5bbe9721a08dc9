#include <gtest/gtest.h>

#include "wheelfree/generate.hpp"
#include "wheelfree/linegraph.hpp"
#include "wheelfree/named.hpp"
#include "wheelfree/planar.hpp"
#include "wheelfree/structure.hpp"

using namespace wheelfree;

namespace {

int face_count(const Graph& g) {
  const auto e = planarity(g);
  return e ? static_cast<int>(faces(*e).size()) : -1;
}

}  // namespace

TEST(Planarity, Examples) {
  EXPECT_EQ(face_count(named::complete(4)), 4);
  EXPECT_FALSE(planarity(named::complete(5)));
  EXPECT_EQ(face_count(named::prism()), 5);
  EXPECT_FALSE(is_planar(named::complete_bipartite(3, 3)));
  EXPECT_FALSE(is_planar(named::petersen()));
  EXPECT_TRUE(is_planar(named::octahedron()));
  EXPECT_TRUE(is_planar(named::cube()));
  EXPECT_TRUE(is_planar(Graph(0)));
  EXPECT_TRUE(is_planar(Graph(3)));
}

TEST(Planarity, NonPlanarAfterSubdivision) {
  EXPECT_FALSE(is_planar(subdivide_all(named::complete(5))));
  EXPECT_FALSE(is_planar(subdivide_all(named::petersen())));
  // K5 minus an edge is planar.
  Graph k5e = named::complete(5);
  k5e.remove_edge(0, 1);
  EXPECT_TRUE(is_planar(k5e));
}

TEST(Faces, Census) {
  const auto k4 = faces(*planarity(named::complete(4)));
  EXPECT_EQ(k4.size(), 4u);
  for (const Face& f : k4) EXPECT_EQ(f.size(), 3u);

  const auto c4 = faces(*planarity(named::cycle(4)));
  ASSERT_EQ(c4.size(), 2u);
  EXPECT_EQ(c4[0].size(), 4u);
  EXPECT_EQ(c4[1].size(), 4u);

  const auto prism = faces(*planarity(named::prism()));
  std::vector<std::size_t> sizes;
  for (const Face& f : prism) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 3, 4, 4, 4}));
}

TEST(Faces, NormalisedToLeastVertex) {
  for (const Face& f : faces(*planarity(named::cube()))) EXPECT_EQ(f.front(), *std::min_element(f.begin(), f.end()));
}

TEST(Faces, EulerAndSimpleCyclesOnRandomPlanarGraphs) {
  Rng rng(41);
  int planar_seen = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_gnp(uniform_int(rng, 3, 12), 0.3, rng);
    const auto emb = planarity(g);
    if (!emb) continue;
    ++planar_seen;
    EXPECT_EQ(embedding_graph(*emb), g);
    const auto fs = faces(*emb);
    // Per component: n - m + f = 2, with one outer face shared by all
    // components' traversals counted separately.
    const int comps = static_cast<int>(connected_components(g).size());
    int isolated = 0;
    for (int v = 0; v < g.vertex_count(); ++v) isolated += g.degree(v) == 0;
    EXPECT_EQ(g.vertex_count() - isolated - g.edge_count() + static_cast<int>(fs.size()), 2 * (comps - isolated))
        << write_graph6(g);
    if (is_connected(g) && g.vertex_count() >= 3 && cut_vertices(g).empty())
      for (const Face& f : fs) {
        std::vector<int> s = f;
        std::sort(s.begin(), s.end());
        EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end()) << write_graph6(g);
      }
  }
  EXPECT_GT(planar_seen, 100);
}

TEST(Faces, GeneratedClassMembers) {
  for (int seed = 0; seed < 20; ++seed) {
    const Graph g = generate_member(seed_catalog(), {"K4", "prism", "cube", "K23"}, 3, seed);
    const auto emb = planarity(g);
    ASSERT_TRUE(emb);
    EXPECT_EQ(g.vertex_count() - g.edge_count() + static_cast<int>(faces(*emb).size()), 2);
  }
}

TEST(TriangleIsFace, Examples) {
  const Graph k4 = named::complete(4);
  for (const Triangle& t : {Triangle{0, 1, 2}, Triangle{0, 1, 3}, Triangle{0, 2, 3}, Triangle{1, 2, 3}})
    EXPECT_TRUE(triangle_is_face(k4, t));
  EXPECT_TRUE(triangle_is_face(named::prism(), {0, 1, 2}));
  EXPECT_TRUE(triangle_is_face(named::prism(), {3, 4, 5}));
}

TEST(TriangleIsFace, OctahedronTrianglesAreAllFaces) {
  const Graph o = named::octahedron();
  int triangles = 0, facial = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        if (o.has_edge(a, b) && o.has_edge(b, c) && o.has_edge(a, c)) {
          ++triangles;
          facial += triangle_is_face(o, {a, b, c});
        }
  EXPECT_EQ(facial, 8);
  EXPECT_EQ(facial, triangles);
}

TEST(TriangleIsFace, SeparatingTriangle) {
  // K4 with a vertex stacked into each face.
  Graph stacked(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const Triangle faces_k4[4] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int i = 0; i < 4; ++i)
    for (int v : faces_k4[i]) stacked.add_edge(v, 4 + i);
  EXPECT_FALSE(triangle_is_face(stacked, {0, 1, 2}));
  EXPECT_TRUE(triangle_is_face(stacked, {0, 1, 4}));
}

TEST(TriangleIsFace, Preconditions) {
  EXPECT_THROW(triangle_is_face(named::cycle(4), {0, 1, 2}), PreconditionError);
  EXPECT_THROW(triangle_is_face(named::complete(5), {0, 1, 2}), PreconditionError);
  EXPECT_THROW(triangle_is_face(named::prism(), {0, 1, 3}), PreconditionError);
}

TEST(Embedding, TextRoundTrip) {
  const Embedding e = *planarity(named::cube());
  const Embedding back = read_embedding(write_embedding(e));
  EXPECT_EQ(back.rotation, e.rotation);
  EXPECT_THROW(read_embedding("0: 1\n1: 2\n"), ParseError);
}

TEST(Planarity, MatchesLineGraphOnRandomSubcubic) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const Graph h = random_subcubic(uniform_int(rng, 4, 16), rng, 40);
    EXPECT_EQ(is_planar(h), is_planar(line_graph(h).graph)) << write_graph6(h);
  }
}
