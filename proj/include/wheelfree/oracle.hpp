#pragma once

// Slow reference implementations for cross-checking. Nothing here calls into
// the search, connectivity, planarity or colouring code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"

namespace wheelfree::oracle {

namespace detail {

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) a[u][v] = u != v && g.has_edge(u, v);
  return a;
}

inline bool colorable(const std::vector<std::vector<int>>& conflicts, int k) {
  const int n = static_cast<int>(conflicts.size());
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  // Vertex i may open at most one new colour: i uses colours 1..max_used+1.
  std::function<bool(int, int)> go = [&](int i, int max_used) {
    if (i == n) return true;
    for (int c = 1; c <= std::min(k, max_used + 1); ++c) {
      bool ok = true;
      for (int j : conflicts[i])
        if (j < i && col[j] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      col[i] = c;
      if (go(i + 1, std::max(max_used, c))) return true;
    }
    col[i] = 0;
    return false;
  };
  return go(0, 0);
}

}  // namespace detail

/// Least k <= cap with a proper k-colouring; cap + 1 means "more than cap".
inline int chromatic_number_bf(const Graph& g, int cap = 5) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<std::vector<int>> conflicts(static_cast<std::size_t>(n));
  const auto a = detail::adjacency(g);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (a[u][v]) conflicts[u].push_back(v);
  for (int k = 1; k <= cap; ++k)
    if (detail::colorable(conflicts, k)) return k;
  return cap + 1;
}

/// Least k <= cap with a proper k-edge-colouring; cap + 1 means "more".
inline int edge_chromatic_bf(const Graph& g, int cap = 5) {
  const int n = g.vertex_count();
  const auto a = detail::adjacency(g);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a[u][v]) es.emplace_back(u, v);
  if (es.empty()) return 0;
  const int m = static_cast<int>(es.size());
  std::vector<std::vector<int>> conflicts(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && (es[i].first == es[j].first || es[i].first == es[j].second || es[i].second == es[j].first ||
                     es[i].second == es[j].second))
        conflicts[i].push_back(j);
  for (int k = 1; k <= cap; ++k)
    if (detail::colorable(conflicts, k)) return k;
  return cap + 1;
}

/// Subset enumeration: no vertex set inducing a cycle has an outside vertex
/// with three or more neighbours on it.
inline bool wheel_free_bf(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16) throw PreconditionError("wheel_free_bf: at most 16 vertices");
  const auto a = detail::adjacency(g);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1u) members.push_back(v);
    if (members.size() < 3) continue;
    bool two_regular = true;
    for (int v : members) {
      int d = 0;
      for (int w : members) d += a[v][w];
      two_regular = two_regular && d == 2;
    }
    if (!two_regular) continue;
    // 2-regular and connected means a single cycle.
    std::vector<int> stack{members[0]};
    std::uint32_t seen = 1u << members[0];
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : members)
        if (a[v][w] && !(seen >> w & 1u)) {
          seen |= 1u << w;
          stack.push_back(w);
        }
    }
    if (seen != s) continue;
    for (int u = 0; u < n; ++u) {
      if (s >> u & 1u) continue;
      int hits = 0;
      for (int w : members) hits += a[u][w];
      if (hits >= 3) return false;
    }
  }
  return true;
}

/// Edges xy for which x and y are joined by two internally disjoint paths in
/// g - xy, i.e. edges that are chords of some cycle.
inline int chord_count_bf(const Graph& g) {
  const int n = g.vertex_count();
  const auto a = detail::adjacency(g);
  auto joined = [&](int x, int y, int banned) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (!a[v][w] || seen[w] || w == banned || (v == x && w == y) || (v == y && w == x)) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
    return static_cast<bool>(seen[y]);
  };
  int count = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!a[x][y] || !joined(x, y, -1)) continue;
      bool two = true;
      for (int w = 0; w < n && two; ++w)
        if (w != x && w != y) two = joined(x, y, w);
      count += two;
    }
  return count;
}

/// Largest clique and largest independent set, by subset enumeration.
inline int clique_number_bf(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw PreconditionError("clique_number_bf: at most 24 vertices");
  const auto a = detail::adjacency(g);
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1u) && (s >> v & 1u) && !a[u][v]) ok = false;
    if (ok) best = size;
  }
  return best;
}

inline int independence_number_bf(const Graph& g) {
  const int n = g.vertex_count();
  Graph complement(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) complement.add_edge(u, v);
  return clique_number_bf(complement);
}

/// The 13-vertex circulant with connection set {1, 5}, checked to have
/// clique number 2 and independence number 4.
inline Graph fixture_r35() {
  constexpr int n = 13;
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int step : {1, 5}) g.add_edge(i, (i + step) % n);
  if (g.edge_count() != 26 || clique_number_bf(g) != 2 || independence_number_bf(g) != 4)
    throw InternalError("fixture_r35: circulant failed its clique/independence checks");
  return g;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration up to isomorphism

namespace detail {

// Adjacency bits of the upper triangle under `order`.
inline std::string code_of(const std::vector<std::vector<bool>>& a, const std::vector<int>& order) {
  const std::size_t n = order.size();
  std::string s;
  s.reserve(n * (n - 1) / 2);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) s.push_back(a[order[i]][order[j]] ? '1' : '0');
  return s;
}

// Canonical code: minimum over all orderings that respect a stable colour
// refinement of the degrees. Refinement is isomorphism-invariant, so the
// minimum is a complete invariant.
inline std::string canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  const auto a = adjacency(g);
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (a[v][w]) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, idx] : rank) idx = r++;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) next[v] = rank[sig[v]];
    if (next == colour) break;
    colour = std::move(next);
  }
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[colour[v]].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [c, vs] : classes) blocks.push_back(vs);

  std::string best;
  std::vector<int> order;
  std::function<void(std::size_t)> go = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::string s = code_of(a, order);
      if (best.empty() || s < best) best = std::move(s);
      return;
    }
    std::vector<int> perm = blocks[b];
    do {
      order.insert(order.end(), perm.begin(), perm.end());
      go(b + 1);
      order.resize(order.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  go(0);
  // Distinguish the class sizes too, so equal codes imply equal refinements.
  std::string prefix;
  for (const auto& bl : blocks) prefix += std::to_string(bl.size()) + ",";
  return prefix + "|" + best;
}

}  // namespace detail

/// Every graph on n vertices up to isomorphism, optionally with maximum
/// degree at most `max_degree`. Built by adding a vertex to each graph on
/// n - 1 vertices in every possible way and keeping one per canonical code.
inline std::vector<Graph> enumerate_graphs(int n, int max_degree = -1) {
  if (n < 0 || n > 9) throw PreconditionError("enumerate_graphs: n must be in 0..9");
  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& h : level) {
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        if (max_degree >= 0 && __builtin_popcount(mask) > max_degree) continue;
        Graph g(k);
        for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
        bool ok = true;
        for (int v = 0; v < k - 1; ++v)
          if (mask >> v & 1u) {
            g.add_edge(v, k - 1);
            ok = ok && (max_degree < 0 || g.degree(v) <= max_degree);
          }
        if (!ok) continue;
        next.emplace(detail::canonical_code(g), std::move(g));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

inline bool connected_bf(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

inline std::vector<Graph> enumerate_connected_graphs(int n, int max_degree = -1) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_graphs(n, max_degree))
    if (connected_bf(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace wheelfree::oracle
