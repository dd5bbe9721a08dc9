#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/transform.hpp"

namespace wheelfree {

/// Brute force: n >= k+1 and no vertex set of size < k disconnects g.
inline bool is_k_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) throw PreconditionError("is_k_connected: k must be in 1..3");
  const int n = g.vertex_count();
  if (n <= k) throw PreconditionError("is_k_connected: need more than k vertices");
  VertexSet rest = g.all_vertices();
  if (!is_connected(g, rest)) return false;
  if (k >= 2) {
    for (int a = 0; a < n; ++a) {
      rest.erase(a);
      const bool ok = is_connected(g, rest);
      rest.insert(a);
      if (!ok) return false;
    }
  }
  if (k >= 3) {
    for (int a = 0; a < n; ++a) {
      rest.erase(a);
      for (int b = a + 1; b < n; ++b) {
        rest.erase(b);
        const bool ok = is_connected(g, rest);
        rest.insert(b);
        if (!ok) return false;
      }
      rest.insert(a);
    }
  }
  return true;
}

/// Non-throwing form: false when n <= k.
inline bool is_3_connected(const Graph& g) { return g.vertex_count() > 3 && is_k_connected(g, 3); }

/// A clique whose removal leaves at least two components.
struct CliqueCutset {
  std::vector<int> clique;           // ascending
  std::vector<VertexSet> components; // components of G - clique, by least vertex
};

inline std::string cutset_certificate(const CliqueCutset& c) {
  std::ostringstream os;
  os << "CUTSET";
  for (int v : c.clique) os << ' ' << v;
  return os.str();
}

namespace detail {

inline std::optional<CliqueCutset> try_cutset(const Graph& g, std::vector<int> clique) {
  VertexSet rest = g.all_vertices();
  for (int v : clique) rest.erase(v);
  auto comps = connected_components(g, rest);
  if (comps.size() < 2) return std::nullopt;
  return CliqueCutset{std::move(clique), std::move(comps)};
}

}  // namespace detail

/// Smallest, then lexicographically least, clique cutset with at most
/// `max_size` vertices.
inline std::optional<CliqueCutset> find_clique_cutset(const Graph& g, int max_size = 3) {
  if (max_size < 1 || max_size > 3) throw PreconditionError("find_clique_cutset: max_size must be in 1..3");
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (auto c = detail::try_cutset(g, {v})) return c;
  if (max_size < 2) return std::nullopt;
  const auto es = g.edges();
  for (const Edge& e : es)
    if (auto c = detail::try_cutset(g, {e.u, e.v})) return c;
  if (max_size < 3) return std::nullopt;
  for (const Edge& e : es) {
    const VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
    for (int w = common.next(e.v + 1); w >= 0; w = common.next(w + 1))
      if (auto c = detail::try_cutset(g, {e.u, e.v, w})) return c;
  }
  return std::nullopt;
}

/// Verdict of is_almost_3_connected.
struct ThreeConnected {};
struct SubdivisionCase {
  int subdivision_vertex;  // the unique degree-2 vertex
};
struct NotAlmost3Connected {};
using Almost3Connectivity = std::variant<ThreeConnected, SubdivisionCase, NotAlmost3Connected>;

/// 3-connected, or a 3-connected graph with one edge subdivided once.
inline Almost3Connectivity is_almost_3_connected(const Graph& g) {
  if (is_3_connected(g)) return ThreeConnected{};
  int m = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) continue;
    if (m >= 0) return NotAlmost3Connected{};
    m = v;
  }
  if (m < 0) return NotAlmost3Connected{};
  const auto nb = g.neighbors(m).to_vector();
  if (g.has_edge(nb[0], nb[1])) return NotAlmost3Connected{};
  Graph h = g;
  h.remove_edge(m, nb[0]);
  h.remove_edge(m, nb[1]);
  h.add_edge(nb[0], nb[1]);
  VertexSet keep = h.all_vertices();
  keep.erase(m);
  if (is_3_connected(induced_subgraph(h, keep).graph)) return SubdivisionCase{m};
  return NotAlmost3Connected{};
}

/// All unordered pairs {a, b} (a < b) whose removal disconnects g.
inline std::vector<std::pair<int, int>> two_cuts(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("two_cuts: graph is disconnected");
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> out;
  VertexSet rest = g.all_vertices();
  for (int a = 0; a < n; ++a) {
    rest.erase(a);
    for (int b = a + 1; b < n; ++b) {
      rest.erase(b);
      if (!is_connected(g, rest)) out.emplace_back(a, b);
      rest.insert(b);
    }
    rest.insert(a);
  }
  return out;
}

}  // namespace wheelfree
