#include <gtest/gtest.h>

#include <random>

#include "wheelfree/generate.hpp"
#include "wheelfree/isomorphism.hpp"
#include "wheelfree/linegraph.hpp"
#include "wheelfree/named.hpp"
#include "wheelfree/oracle.hpp"
#include "wheelfree/patterns.hpp"

using namespace wheelfree;

namespace {

// First k-subset in lexicographic order inducing a copy of `pattern`.
std::optional<std::vector<int>> first_induced_copy(const Graph& g, const Graph& pattern) {
  const int n = g.vertex_count(), k = pattern.vertex_count();
  if (k > n) return std::nullopt;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (is_isomorphic(induced_subgraph(g, idx).graph, pattern)) return idx;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TEST(FindPattern, Examples) {
  EXPECT_TRUE(find_pattern(named::complete(4), PatternKind::K4));
  EXPECT_FALSE(find_pattern(named::cycle(5), PatternKind::claw));
  EXPECT_TRUE(find_pattern(line_graph(named::paw()).graph, PatternKind::diamond));
}

TEST(FindPattern, EachPatternFindsItself) {
  for (PatternKind k : all_pattern_kinds) {
    const Graph p = pattern_graph(k);
    const auto hit = find_pattern(p, k);
    ASSERT_TRUE(hit) << pattern_name(k);
    EXPECT_TRUE(is_isomorphic(induced_subgraph(p, *hit).graph, p));
    EXPECT_EQ(parse_pattern_kind(pattern_name(k)), k);
  }
}

TEST(FindPattern, LexicographicallyFirstOccurrence) {
  Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_gnp(8, 0.45, rng);
    for (PatternKind k : all_pattern_kinds) {
      const auto fast = find_pattern(g, k);
      const auto slow = first_induced_copy(g, pattern_graph(k));
      ASSERT_EQ(fast.has_value(), slow.has_value()) << write_graph6(g) << ' ' << pattern_name(k);
      if (!fast) continue;
      std::vector<int> sorted = *fast;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(sorted, *slow) << write_graph6(g) << ' ' << pattern_name(k);
      // Role order: vertex i of the answer plays vertex i of the pattern.
      const Graph p = pattern_graph(k);
      for (const Edge& e : p.edges()) EXPECT_TRUE(g.has_edge((*fast)[e.u], (*fast)[e.v]));
    }
  }
}

TEST(FindPattern, CertificateText) {
  const auto hit = find_pattern(named::claw(), PatternKind::claw);
  ASSERT_TRUE(hit);
  EXPECT_EQ(pattern_certificate(PatternKind::claw, *hit), "PATTERN claw 0 1 2 3");
}

TEST(FindWheel, Examples) {
  const WheelSearch k4 = find_wheel(named::complete(4));
  ASSERT_EQ(k4.status, SearchStatus::found);
  EXPECT_EQ(k4.witness->rim.size(), 3u);
  EXPECT_TRUE(verify_wheel(named::complete(4), *k4.witness));

  EXPECT_EQ(find_wheel(named::prism()).status, SearchStatus::absent);

  const Graph w5 = named::wheel(5);
  const WheelSearch ws = find_wheel(w5);
  ASSERT_EQ(ws.status, SearchStatus::found);
  EXPECT_EQ(ws.witness->center, 5);
  EXPECT_EQ(ws.witness->rim.size(), 5u);
  EXPECT_TRUE(verify_wheel(w5, *ws.witness));
}

TEST(FindWheel, AgreesWithSubsetEnumeration) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::enumerate_graphs(n)) {
      const WheelSearch ws = find_wheel(g);
      ASSERT_NE(ws.status, SearchStatus::unknown);
      EXPECT_EQ(ws.status == SearchStatus::absent, oracle::wheel_free_bf(g)) << write_graph6(g);
      if (ws.witness) {
        EXPECT_TRUE(verify_wheel(g, *ws.witness)) << write_graph6(g);
      }
    }
}

TEST(FindWheel, RandomGraphsAgreeWithOracle) {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_gnp(uniform_int(rng, 4, 11), 0.3, rng);
    const WheelSearch ws = find_wheel(g);
    EXPECT_EQ(ws.status == SearchStatus::absent, oracle::wheel_free_bf(g)) << write_graph6(g);
    if (ws.witness) {
      EXPECT_TRUE(verify_wheel(g, *ws.witness));
    }
  }
}

TEST(FindWheel, ThreadCountDoesNotChangeWitness) {
  Rng rng(25);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_gnp(12, 0.3, rng);
    const WheelSearch one = find_wheel(g, {std::chrono::milliseconds(5000), 1});
    const WheelSearch four = find_wheel(g, {std::chrono::milliseconds(5000), 4});
    EXPECT_EQ(one.status, four.status);
    EXPECT_EQ(one.witness, four.witness) << write_graph6(g);
  }
}

TEST(FindWheel, ExhaustedBudgetIsUnknown) {
  // A large class member needs an exhaustive search to prove absence.
  const Graph g = generate_member(seed_catalog(), {"cube"}, 4, 1);
  const WheelSearch ws = find_wheel(g, {std::chrono::milliseconds(0), 1});
  EXPECT_EQ(ws.status, SearchStatus::unknown);
  EXPECT_FALSE(ws.witness);
  EXPECT_EQ(find_wheel(g).status, SearchStatus::absent);
}

TEST(FindWheel, WitnessCertificateRoundTrip) {
  const WheelWitness w{6, {0, 1, 2, 3, 4, 5}};
  EXPECT_EQ(wheel_certificate(w), "WHEEL 6 0 1 2 3 4 5");
  EXPECT_EQ(parse_wheel_certificate(wheel_certificate(w)), w);
  EXPECT_THROW(parse_wheel_certificate("WHEEL x"), ParseError);
  EXPECT_THROW(parse_wheel_certificate("PATTERN 1 2"), ParseError);
}

TEST(VerifyWheel, RejectsBadWitnesses) {
  const Graph w5 = named::wheel(5);
  EXPECT_FALSE(verify_wheel(w5, {5, {0, 1, 2}}));           // not a cycle
  EXPECT_FALSE(verify_wheel(w5, {0, {1, 2, 3, 4, 5}}));      // chord through the hub
  EXPECT_FALSE(verify_wheel(named::cycle(6), {0, {1, 2}}));  // rim too short
}

TEST(ChordEdges, Examples) {
  EXPECT_EQ(chord_edges(named::diamond()), (std::vector<Edge>{Edge(0, 1)}));
  EXPECT_TRUE(chord_edges(subdivide_all(named::complete(4))).empty());
  EXPECT_EQ(chord_edges(named::complete(4)).size(), 6u);
  EXPECT_TRUE(is_almost_chordless(named::diamond()));
  EXPECT_FALSE(is_almost_chordless(named::complete(4)));
  EXPECT_TRUE(is_chordless(named::path(6)));
  EXPECT_TRUE(is_chordless(named::star(5)));
}

TEST(ChordEdges, AgreesWithPathOracle) {
  Rng rng(27);
  for (int i = 0; i < 400; ++i) {
    const Graph g = random_gnp(uniform_int(rng, 2, 10), 0.3, rng);
    EXPECT_EQ(static_cast<int>(chord_edges(g).size()), oracle::chord_count_bf(g)) << write_graph6(g);
  }
}

TEST(Patterns, K4AndDiamondFreeMeansOneCommonNeighbourPerEdge) {
  for (int n = 4; n <= 7; ++n)
    for (const Graph& g : oracle::enumerate_graphs(n)) {
      if (find_pattern(g, PatternKind::K4) || find_pattern(g, PatternKind::diamond)) continue;
      for (const Edge& e : g.edges()) EXPECT_LE((g.neighbors(e.u) & g.neighbors(e.v)).size(), 1) << write_graph6(g);
    }
}
