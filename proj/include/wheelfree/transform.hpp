#pragma once

#include <string>
#include <vector>

#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"

namespace wheelfree {

/// G[s]: vertices of s in ascending order, renumbered 0..|s|-1.
inline Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw PreconditionError("vertex set universe does not match graph");
  Subgraph out;
  out.original = s.to_vector();
  const auto loc = out.local_index(g.vertex_count());
  out.graph = Graph(static_cast<int>(out.original.size()));
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    const VertexSet nb = g.neighbors(out.original[i]) & s;
    for (int w : nb)
      if (loc[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), loc[w]);
  }
  return out;
}

inline Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  VertexSet s(g.vertex_count());
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return induced_subgraph(g, s);
}

/// G minus the vertices of s.
inline Subgraph remove_vertices(const Graph& g, const VertexSet& s) { return induced_subgraph(g, s.complement()); }

/// Result of contracting an edge: vertex_map[old] gives the new index.
struct Contraction {
  Graph graph;
  std::vector<int> vertex_map;
};

/// G/e. The endpoints merge into the lower index; the higher index is
/// removed and later indices shift down by one.
inline Contraction contract_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) throw PreconditionError("contract_edge: not an edge");
  const int n = g.vertex_count();
  Contraction out;
  out.vertex_map.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.vertex_map[v] = v < e.v ? v : (v == e.v ? e.u : v - 1);
  out.graph = Graph(n - 1);
  for (const Edge& f : g.edges()) {
    const int a = out.vertex_map[f.u];
    const int b = out.vertex_map[f.v];
    if (a != b) out.graph.add_edge(a, b);  // parallel edges merge in add_edge
  }
  return out;
}

/// Replaces uv by the path u-m-v; m gets index n.
inline Graph subdivide_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) throw PreconditionError("subdivide_edge: not an edge");
  Graph out(g.vertex_count() + 1);
  for (const Edge& f : g.edges())
    if (f != e) out.add_edge(f.u, f.v);
  const int m = g.vertex_count();
  out.add_edge(e.u, m);
  out.add_edge(m, e.v);
  return out;
}

/// Subdivides every edge once. The subdivision vertex of the i-th edge (in
/// lexicographic order) gets index n + i.
inline Graph subdivide_all(const Graph& g) {
  const auto es = g.edges();
  const int n = g.vertex_count();
  Graph out(n + static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i) {
    const int m = n + static_cast<int>(i);
    out.add_edge(es[i].u, m);
    out.add_edge(m, es[i].v);
  }
  return out;
}

/// Repeatedly suppresses the lowest-index vertex of degree 2 (removes it and
/// joins its two neighbours). A component that has shrunk to a triangle is
/// left as is. Any other suppression that would create a parallel edge
/// throws PreconditionError.
inline Graph suppress_degree2(const Graph& g) {
  Graph cur = g;
  VertexSet alive = cur.all_vertices();
  auto is_triangle_component = [&](int v, int a, int b) {
    return cur.degree(a) == 2 && cur.degree(b) == 2 && cur.has_edge(a, b) && cur.neighbors(v).contains(a);
  };
  while (true) {
    int target = -1;
    for (int v : alive) {
      if (cur.degree(v) != 2) continue;
      const auto nb = cur.neighbors(v).to_vector();
      if (cur.has_edge(nb[0], nb[1])) {
        if (is_triangle_component(v, nb[0], nb[1])) continue;
        throw PreconditionError("suppressing vertex " + std::to_string(v) + " would create a parallel edge");
      }
      target = v;
      break;
    }
    if (target < 0) break;
    const auto nb = cur.neighbors(target).to_vector();
    cur.remove_edge(target, nb[0]);
    cur.remove_edge(target, nb[1]);
    cur.add_edge(nb[0], nb[1]);
    alive.erase(target);
  }
  return induced_subgraph(cur, alive).graph;
}

/// Vertex set of the component of `within` reachable from `start`.
inline VertexSet reach(const Graph& g, int start, const VertexSet& within) {
  VertexSet seen(g.vertex_count());
  if (!within.contains(start)) return seen;
  VertexSet frontier(g.vertex_count());
  frontier.insert(start);
  seen.insert(start);
  while (!frontier.empty()) {
    VertexSet next(g.vertex_count());
    for (int v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

/// Components of G[within], ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  for (int v = left.first(); v >= 0; v = left.first()) {
    VertexSet c = reach(g, v, left);
    left -= c;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.all_vertices());
}

inline bool is_connected(const Graph& g, const VertexSet& within) {
  const int v = within.first();
  return v < 0 || reach(g, v, within) == within;
}

inline bool is_connected(const Graph& g) { return is_connected(g, g.all_vertices()); }

/// Disjoint union; vertices of b follow those of a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.vertex_count(), e.v + a.vertex_count());
  return out;
}

/// Applies a vertex relabelling: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

}  // namespace wheelfree
