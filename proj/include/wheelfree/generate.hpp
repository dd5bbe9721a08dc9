#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/patterns.hpp"
#include "wheelfree/planar.hpp"
#include "wheelfree/structure.hpp"
#include "wheelfree/transform.hpp"

namespace wheelfree {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Graph random_gnp(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Random graph of maximum degree three: up to `attempts` random pairs are
/// joined whenever both ends still have room.
inline Graph random_subcubic(int n, Rng& rng, int attempts = -1) {
  Graph g(n);
  if (n < 2) return g;
  if (attempts < 0) attempts = 2 * n;
  for (int i = 0; i < attempts; ++i) {
    const int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
    if (u != v && g.degree(u) < 3 && g.degree(v) < 3) g.add_edge(u, v);
  }
  return g;
}

/// Sides {0..a-1} and {a..a+b-1}.
inline Graph random_bipartite(int a, int b, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Glue a copy of `piece` onto `g` along facial triangles chosen by `rng`,
/// with a random identification of their corners.
inline Graph glue_random(const Graph& g, const Graph& piece, Rng& rng) {
  const auto ft1 = facial_triangles(g);
  const auto ft2 = facial_triangles(piece);
  if (ft1.empty() || ft2.empty()) throw PreconditionError("glue_random: no facial triangle");
  const Triangle t1 = ft1[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(ft1.size()) - 1))];
  Triangle t2 = ft2[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(ft2.size()) - 1))];
  for (int i = uniform_int(rng, 0, 5); i > 0; --i) std::next_permutation(t2.begin(), t2.end());
  return glue(g, t1, piece, t2).graph;
}

/// A class member: the basic graph of a random seed among `names`, then
/// `glues` gluings of further random seeds' basic graphs. Deterministic in
/// (catalog, names, glues, seed).
inline Graph generate_member(const std::vector<CatalogEntry>& catalog, const std::vector<std::string>& names, int glues,
                             std::uint64_t seed) {
  if (names.empty()) throw PreconditionError("generate_member: no seed names");
  if (glues < 0) throw PreconditionError("generate_member: negative glue count");
  std::vector<const Graph*> pool;
  for (const auto& name : names) pool.push_back(&catalog_lookup(catalog, name).basic);
  Rng rng(seed);
  auto pick = [&]() -> const Graph& { return *pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pool.size()) - 1))]; };
  Graph g = pick();
  for (int i = 0; i < glues; ++i) g = glue_random(g, pick(), rng);
  return g;
}

/// Every edge of r subdivided once except `keep`. For a 3-edge-connected
/// cubic r this leaves `keep` as the only chord.
inline Graph subdivide_all_but(const Graph& r, Edge keep) {
  if (!r.has_edge(keep.u, keep.v)) throw PreconditionError("subdivide_all_but: not an edge");
  Graph out = r;
  for (const Edge& e : r.edges())
    if (e != keep) out = subdivide_edge(out, e);
  return out;
}

// ---------------------------------------------------------------------------
// Augmentations. Results stay planar but are generally only 2-connected.

/// New vertex adjacent to both ends of an edge. Never creates a wheel.
inline Graph add_ear(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw PreconditionError("add_ear: not an edge");
  Graph out(g.vertex_count() + 1);
  for (const Edge& f : g.edges()) out.add_edge(f.u, f.v);
  out.add_edge(e.u, g.vertex_count());
  out.add_edge(e.v, g.vertex_count());
  return out;
}

/// Identify edge e1 of g1 with edge e2 of g2 (e1.u ~ e2.u) and delete it.
inline Graph two_sum(const Graph& g1, Edge e1, const Graph& g2, Edge e2) {
  if (!g1.has_edge(e1.u, e1.v) || !g2.has_edge(e2.u, e2.v)) throw PreconditionError("two_sum: not an edge");
  const int n1 = g1.vertex_count();
  std::vector<int> map(static_cast<std::size_t>(g2.vertex_count()), -1);
  map[e2.u] = e1.u;
  map[e2.v] = e1.v;
  int next = n1;
  for (int v = 0; v < g2.vertex_count(); ++v)
    if (map[v] < 0) map[v] = next++;
  Graph out(next);
  for (const Edge& f : g1.edges())
    if (f != e1) out.add_edge(f.u, f.v);
  for (const Edge& f : g2.edges())
    if (f != e2) out.add_edge(map[f.u], map[f.v]);
  return out;
}

inline Edge random_edge(const Graph& g, Rng& rng) {
  const auto es = g.edges();
  if (es.empty()) throw PreconditionError("random_edge: graph has no edges");
  return es[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(es.size()) - 1))];
}

/// One random augmentation (ear, subdivision, or 2-sum with `other`) that
/// keeps g planar and wheel-free. Candidates that break either property, or
/// whose wheel check runs out of budget, are discarded; after `tries`
/// failures g is returned unchanged.
inline Graph augment_random(const Graph& g, const Graph& other, Rng& rng, WheelSearchOptions wheel = {},
                            int tries = 8) {
  for (int t = 0; t < tries; ++t) {
    const int kind = uniform_int(rng, 0, 2);
    Graph h;
    if (kind == 0) return add_ear(g, random_edge(g, rng));
    if (kind == 1) h = subdivide_edge(g, random_edge(g, rng));
    else h = two_sum(g, random_edge(g, rng), other, random_edge(other, rng));
    if (is_planar(h) && find_wheel(h, wheel).status == SearchStatus::absent) return h;
  }
  return g;
}

}  // namespace wheelfree
