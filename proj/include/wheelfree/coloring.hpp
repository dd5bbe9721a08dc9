#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wheelfree/blocks.hpp"
#include "wheelfree/connectivity.hpp"
#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/linegraph.hpp"
#include "wheelfree/patterns.hpp"
#include "wheelfree/planar.hpp"
#include "wheelfree/transform.hpp"

namespace wheelfree {

/// Colour per edge, colours 1..k.
using EdgeColoring = std::map<Edge, int>;
/// Colour per vertex (index = vertex), colours 1..k.
using VertexColoring = std::vector<int>;

/// Rule counters for both recursions. A nonzero fallback count means a
/// constructive step produced an improper colouring and exhaustive search
/// was used for that subproblem; the offending subgraphs are kept (graph6).
struct ColoringStats {
  long r1 = 0, r2 = 0, r3 = 0, r4 = 0, r5 = 0, r5_diamond = 0;
  long s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  long edge_fallbacks = 0;
  long vertex_fallbacks = 0;
  std::vector<std::string> fallback_instances;

  long fallbacks() const { return edge_fallbacks + vertex_fallbacks; }
};

/// Wheel found where the input was required to be wheel-free.
struct WheelFoundError : PreconditionError {
  WheelWitness witness;
  explicit WheelFoundError(WheelWitness w)
      : PreconditionError("input contains a wheel: " + wheel_certificate(w)), witness(std::move(w)) {}
};

// ---------------------------------------------------------------------------
// Verification

/// Proper and total. Throws PreconditionError if the map is partial or names
/// a non-edge.
inline bool verify_edge_coloring(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.size()) != g.edge_count()) throw PreconditionError("edge colouring is not total");
  for (const auto& [e, col] : c)
    if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) throw PreconditionError("edge colouring names a non-edge");
  std::vector<std::vector<int>> at(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& [e, col] : c) {
    if (col < 1) return false;
    at[e.u].push_back(col);
    at[e.v].push_back(col);
  }
  for (auto& cols : at) {
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return false;
  }
  return true;
}

inline bool verify_vertex_coloring(const Graph& g, const VertexColoring& c) {
  if (static_cast<int>(c.size()) != g.vertex_count()) throw PreconditionError("vertex colouring is not total");
  for (int col : c)
    if (col < 1) return false;
  for (const Edge& e : g.edges())
    if (c[e.u] == c[e.v]) return false;
  return true;
}

inline int colors_used(const EdgeColoring& c) {
  int k = 0;
  for (const auto& [e, col] : c) k = std::max(k, col);
  return k;
}

inline int colors_used(const VertexColoring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()); }

/// `u v color` lines.
inline std::string write_edge_coloring(const EdgeColoring& c) {
  std::ostringstream os;
  for (const auto& [e, col] : c) os << e.u << ' ' << e.v << ' ' << col << '\n';
  return os.str();
}

/// `v color` lines.
inline std::string write_vertex_coloring(const VertexColoring& c) {
  std::ostringstream os;
  for (std::size_t v = 0; v < c.size(); ++v) os << v << ' ' << c[v] << '\n';
  return os.str();
}

namespace detail {

using Palette = std::array<int, 4>;  // palette[old] = new, colours 1..3

inline std::vector<Palette> all_palettes() {
  std::vector<Palette> out;
  std::array<int, 3> p{1, 2, 3};
  do out.push_back({0, p[0], p[1], p[2]});
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Least palette (in permutation order) with palette[from[i]] == to[i].
inline std::optional<Palette> palette_matching(const std::vector<std::pair<int, int>>& constraints) {
  for (const Palette& p : all_palettes()) {
    bool ok = true;
    for (auto [from, to] : constraints) ok = ok && from >= 1 && from <= 3 && p[from] == to;
    if (ok) return p;
  }
  return std::nullopt;
}

inline void repaint(EdgeColoring& c, const Palette& p) {
  for (auto& [e, col] : c) col = p[col];
}
inline void repaint(VertexColoring& c, const Palette& p) {
  for (int& col : c) col = p[col];
}

// Exhaustive proper edge colouring with k colours (first edge fixed to 1).
inline std::optional<EdgeColoring> backtrack_edge_coloring(const Graph& g, int k) {
  const auto es = g.edges();
  const int m = static_cast<int>(es.size());
  std::vector<int> col(static_cast<std::size_t>(m), 0);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < m; ++i) {
    incident[es[i].u].push_back(i);
    incident[es[i].v].push_back(i);
  }
  auto ok = [&](int i, int c) {
    for (int v : {es[i].u, es[i].v})
      for (int j : incident[v])
        if (j != i && col[j] == c) return false;
    return true;
  };
  std::function<bool(int)> go = [&](int i) {
    if (i == m) return true;
    for (int c = 1; c <= (i == 0 ? 1 : k); ++c) {
      if (!ok(i, c)) continue;
      col[i] = c;
      if (go(i + 1)) return true;
      col[i] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  EdgeColoring out;
  for (int i = 0; i < m; ++i) out[es[i]] = col[i];
  return out;
}

// Exhaustive proper vertex colouring with k colours, BFS order.
inline std::optional<VertexColoring> backtrack_vertex_coloring(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> order;
  for (const VertexSet& comp : connected_components(g)) {
    std::vector<int> queue{comp.first()};
    VertexSet seen(n);
    seen.insert(comp.first());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int w : g.neighbors(queue[i]))
        if (!seen.contains(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
    order.insert(order.end(), queue.begin(), queue.end());
  }
  VertexColoring col(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> go = [&](int i) {
    if (i == n) return true;
    const int v = order[i];
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v)) ok = ok && col[w] != c;
      if (!ok) continue;
      col[v] = c;
      if (go(i + 1)) return true;
      col[v] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return col;
}

inline std::optional<VertexSet> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  VertexSet left(n);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      if (side[v] == 0) left.insert(v);
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return left;
}

}  // namespace detail

inline bool is_bipartite(const Graph& g) { return detail::bipartition(g).has_value(); }

// ---------------------------------------------------------------------------
// Konig

/// Proper edge colouring of a bipartite graph with exactly max-degree
/// colours: edges are inserted in lexicographic order; when the least colour
/// a free at u is busy at v, the a/b alternating path from v (b free at v) is
/// swapped, which cannot reach u in a bipartite graph.
inline EdgeColoring konig_edge_color(const Graph& g) {
  if (!is_bipartite(g)) throw PreconditionError("konig_edge_color: graph is not bipartite");
  const int n = g.vertex_count();
  const int delta = g.max_degree();
  // at[v][c]: neighbour reached from v by colour c, or -1.
  std::vector<std::vector<int>> at(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(delta) + 1, -1));
  auto free_at = [&](int v) {
    for (int c = 1; c <= delta; ++c)
      if (at[v][c] < 0) return c;
    throw InternalError("konig_edge_color: no free colour");
  };
  for (const Edge& e : g.edges()) {
    const int a = free_at(e.u);
    if (at[e.v][a] >= 0) {
      const int b = free_at(e.v);
      struct Step {
        int x, y, c;
      };
      std::vector<Step> path;
      for (int x = e.v, c = a; at[x][c] >= 0; c = (c == a ? b : a)) {
        const int y = at[x][c];
        path.push_back({x, y, c});
        x = y;
      }
      for (const Step& s : path) at[s.x][s.c] = at[s.y][s.c] = -1;
      for (const Step& s : path) {
        const int nc = s.c == a ? b : a;
        at[s.x][nc] = s.y;
        at[s.y][nc] = s.x;
      }
      if (at[e.u][a] >= 0 || at[e.v][a] >= 0) throw InternalError("konig_edge_color: alternating path reached u");
    }
    at[e.u][a] = e.v;
    at[e.v][a] = e.u;
  }
  EdgeColoring out;
  for (int v = 0; v < n; ++v)
    for (int c = 1; c <= delta; ++c)
      if (at[v][c] > v) out[Edge(v, at[v][c])] = c;
  return out;
}

// ---------------------------------------------------------------------------
// 3-edge-colouring of almost chordless subcubic graphs

namespace detail {

class AlmostChordlessColorer {
 public:
  explicit AlmostChordlessColorer(ColoringStats& stats) : stats_(stats) {}

  EdgeColoring solve(const Graph& h) {
    if (h.edge_count() == 0) return {};
    if (auto c = reduce_low_degree_edge(h)) return *c;
    if (auto c = split_components(h)) return checked(h, std::move(*c));
    if (auto c = split_cut_vertex(h)) return checked(h, std::move(*c));
    if (auto c = split_two_edge_cut(h)) return checked(h, std::move(*c));

    std::vector<Edge> xx;
    for (const Edge& e : h.edges())
      if (h.degree(e.u) == 3 && h.degree(e.v) == 3) xx.push_back(e);
    if (xx.empty()) {
      ++stats_.r4;
      try {
        return checked(h, konig_edge_color(h));
      } catch (const PreconditionError&) {
        return fallback(h);
      }
    }
    if (xx.size() == 1) return checked(h, chord_endgame(h, xx.front()));
    return fallback(h);
  }

 private:
  EdgeColoring checked(const Graph& h, std::optional<EdgeColoring> c) {
    if (c && verify_edge_coloring(h, *c) && colors_used(*c) <= 3) return std::move(*c);
    return fallback(h);
  }

  EdgeColoring fallback(const Graph& h) {
    ++stats_.edge_fallbacks;
    stats_.fallback_instances.push_back("edge:" + write_graph6(h));
    auto c = backtrack_edge_coloring(h, 3);
    if (!c) throw InternalError("almost chordless subcubic graph without a 3-edge-colouring: " + write_graph6(h));
    return *c;
  }

  static EdgeColoring pull_back(const EdgeColoring& local, const std::vector<int>& original) {
    EdgeColoring out;
    for (const auto& [e, col] : local) out[Edge(original[e.u], original[e.v])] = col;
    return out;
  }

  // Both ends of degree <= 2: colour the rest, then pick a colour free at
  // both ends (at most two are blocked).
  std::optional<EdgeColoring> reduce_low_degree_edge(const Graph& h) {
    for (const Edge& e : h.edges()) {
      if (h.degree(e.u) > 2 || h.degree(e.v) > 2) continue;
      ++stats_.r1;
      Graph rest = h;
      rest.remove_edge(e.u, e.v);
      EdgeColoring c = solve(rest);
      std::array<bool, 4> used{};
      for (const auto& [f, col] : c)
        if (f.shares_endpoint(e)) used[col] = true;
      for (int col = 1; col <= 3; ++col)
        if (!used[col]) {
          c[e] = col;
          return c;
        }
      throw InternalError("edge reduction: no free colour");
    }
    return std::nullopt;
  }

  std::optional<EdgeColoring> split_components(const Graph& h) {
    std::vector<VertexSet> parts;
    for (VertexSet& c : connected_components(h))
      if (c.size() > 1) parts.push_back(std::move(c));
    int covered = 0;
    for (const VertexSet& p : parts) covered += p.size();
    if (parts.size() < 2 && covered == h.vertex_count()) return std::nullopt;
    ++stats_.r2;
    EdgeColoring out;
    for (const VertexSet& p : parts) {
      const Subgraph sub = induced_subgraph(h, p);
      out.merge(pull_back(solve(sub.graph), sub.original));
    }
    return out;
  }

  // Cut vertex v: colour each side with v, then rename palettes so the
  // colours at v are disjoint.
  std::optional<EdgeColoring> split_cut_vertex(const Graph& h) {
    const VertexSet cuts = cut_vertices(h);
    if (cuts.empty()) return std::nullopt;
    ++stats_.r2;
    const int v = cuts.first();
    VertexSet rest = h.all_vertices();
    rest.erase(v);
    EdgeColoring out;
    std::array<bool, 4> used_at_v{};
    for (VertexSet side : connected_components(h, rest)) {
      side.insert(v);
      const Subgraph sub = induced_subgraph(h, side);
      EdgeColoring c = pull_back(solve(sub.graph), sub.original);
      std::vector<int> at_v;
      for (const auto& [e, col] : c)
        if (e.touches(v)) at_v.push_back(col);
      std::optional<Palette> chosen;
      for (const Palette& p : all_palettes()) {
        bool ok = true;
        for (int col : at_v) ok = ok && !used_at_v[p[col]];
        if (ok) {
          chosen = p;
          break;
        }
      }
      if (!chosen) return std::nullopt;
      repaint(c, *chosen);
      for (int col : at_v) used_at_v[(*chosen)[col]] = true;
      out.merge(c);
    }
    return out;
  }

  // Disjoint edges u1u2, v1v2 whose removal disconnects h: colour each side
  // with a marker vertex m_i joined to u_i and v_i, align the palettes so
  // u_i m_i gets 1 and v_i m_i gets 2, then colour u1u2 with 1 and v1v2 with 2.
  std::optional<EdgeColoring> split_two_edge_cut(const Graph& h) {
    const auto es = h.edges();
    for (const Edge& e : es) {
      Graph without = h;
      without.remove_edge(e.u, e.v);
      for (const Edge& f : bridges(without)) {
        if (!(e < f) || e.shares_endpoint(f)) continue;
        if (auto c = two_edge_cut(h, e, f)) {
          ++stats_.r3;
          return c;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<EdgeColoring> two_edge_cut(const Graph& h, Edge e, Edge f) {
    Graph cut = h;
    cut.remove_edge(e.u, e.v);
    cut.remove_edge(f.u, f.v);
    const auto comps = connected_components(cut);
    if (comps.size() != 2) return std::nullopt;
    const VertexSet& c1 = comps[0].contains(e.u) ? comps[0] : comps[1];
    const VertexSet& c2 = comps[0].contains(e.u) ? comps[1] : comps[0];
    const int u1 = e.u, u2 = e.v;
    const int v1 = c1.contains(f.u) ? f.u : f.v;
    const int v2 = f.other(v1);
    if (!c2.contains(u2) || !c2.contains(v2)) return std::nullopt;

    auto side = [&](const VertexSet& part, int u, int v) -> EdgeColoring {
      const Subgraph sub = induced_subgraph(h, part);
      const auto loc = sub.local_index(h.vertex_count());
      const int k = sub.graph.vertex_count();
      Graph with_marker(k + 1);
      for (const Edge& x : sub.graph.edges()) with_marker.add_edge(x.u, x.v);
      with_marker.add_edge(loc[u], k);
      with_marker.add_edge(loc[v], k);
      EdgeColoring c = solve(with_marker);
      const auto p = palette_matching({{c.at(Edge(loc[u], k)), 1}, {c.at(Edge(loc[v], k)), 2}});
      if (!p) throw InternalError("two-edge cut: marker edges share a colour");
      repaint(c, *p);
      EdgeColoring out;
      for (const auto& [x, col] : c)
        if (x.v != k) out[Edge(sub.original[x.u], sub.original[x.v])] = col;
      return out;
    };
    EdgeColoring out = side(c1, u1, v1);
    out.merge(side(c2, u2, v2));
    out[Edge(u1, u2)] = 1;
    out[Edge(v1, v2)] = 2;
    return out;
  }

  // The single edge xy joining two degree-3 vertices, a chord of a cycle.
  std::optional<EdgeColoring> chord_endgame(const Graph& h, Edge xy) {
    ++stats_.r5;
    const int x = xy.u, y = xy.v;
    VertexSet xs = h.neighbors(x), ys = h.neighbors(y);
    xs.erase(y);
    ys.erase(x);
    auto xv = xs.to_vector(), yv = ys.to_vector();
    for (int w : xv)
      if (h.degree(w) != 2) return std::nullopt;
    for (int w : yv)
      if (h.degree(w) != 2) return std::nullopt;

    if (xs == ys) {  // the diamond
      ++stats_.r5_diamond;
      if (h.edge_count() != 5) return std::nullopt;
      return EdgeColoring{{xy, 1}, {Edge(x, xv[0]), 2}, {Edge(y, xv[0]), 3}, {Edge(x, xv[1]), 3}, {Edge(y, xv[1]), 2}};
    }
    if (xs.intersects(ys)) return std::nullopt;

    auto far = [&](int mid, int near) {
      VertexSet s = h.neighbors(mid);
      s.erase(near);
      return s.first();
    };
    int x1 = xv[0], x2 = xv[1], y1 = yv[0], y2 = yv[1];

    // G': delete xy, contract x x1, x x2, y y1, y y2.
    VertexSet keep = h.all_vertices();
    for (int w : {x1, x2, y1, y2}) keep.erase(w);
    const Subgraph sub = induced_subgraph(h, keep);
    const auto loc = sub.local_index(h.vertex_count());
    Graph contracted = sub.graph;
    contracted.remove_edge(loc[x], loc[y]);
    int fx1 = far(x1, x), fx2 = far(x2, x), fy1 = far(y1, y), fy2 = far(y2, y);
    for (auto [a, b] : {std::pair{x, fx1}, {x, fx2}, {y, fy1}, {y, fy2}}) {
      if (loc[b] < 0 || contracted.has_edge(loc[a], loc[b])) return std::nullopt;  // coincidence: not covered
      contracted.add_edge(loc[a], loc[b]);
    }
    if (!is_bipartite(contracted)) return std::nullopt;
    EdgeColoring cp = konig_edge_color(contracted);
    auto col = [&](int a, int b) { return cp.at(Edge(loc[a], loc[b])); };

    // Normalise: x fx1 -> 1, x fx2 -> 2, then y fy1 -> 1.
    auto p = palette_matching({{col(x, fx1), 1}, {col(x, fx2), 2}});
    if (!p) return std::nullopt;
    repaint(cp, *p);
    int a = col(y, fy1), b = col(y, fy2);
    if (a != 1 && b == 1) {
      std::swap(y1, y2);
      std::swap(fy1, fy2);
      std::swap(a, b);
    }
    if (a != 1) {
      // a, b avoid 1, so one of them is 2: swap the roles of colours 1 and 2
      // together with x1 and x2.
      if (b == 2) {
        std::swap(y1, y2);
        std::swap(fy1, fy2);
        std::swap(a, b);
      }
      repaint(cp, Palette{0, 2, 1, 3});
      std::swap(x1, x2);
      std::swap(fx1, fx2);
      a = col(y, fy1);
      b = col(y, fy2);
    }
    if (a != 1 || col(x, fx1) != 1 || col(x, fx2) != 2) return std::nullopt;

    EdgeColoring out;
    for (const auto& [e, c] : cp) {
      const int gu = sub.original[e.u], gv = sub.original[e.v];
      const bool lifted = gu == x || gv == x || gu == y || gv == y;
      if (!lifted) out[Edge(gu, gv)] = c;
    }
    out[Edge(x1, fx1)] = 1;
    out[Edge(x2, fx2)] = 2;
    out[Edge(y1, fy1)] = 1;
    out[Edge(y2, fy2)] = b;
    out[Edge(x, x1)] = 2;
    out[Edge(x, x2)] = 1;
    out[Edge(y, y1)] = 2;
    out[Edge(y, y2)] = 1;
    out[xy] = 3;
    return out;
  }

  ColoringStats& stats_;
};

}  // namespace detail

/// Proper 3-edge-colouring of an almost chordless graph of maximum degree
/// at most three, built by the reduction cascade (low-degree edge, cut
/// vertex, two-edge cut, bipartite case, single-chord endgame). Any step
/// whose lift fails verification is redone by exhaustive search and counted
/// in `stats`.
inline EdgeColoring three_edge_color_almost_chordless(const Graph& g, ColoringStats* stats = nullptr) {
  if (g.max_degree() > 3) throw PreconditionError("three_edge_color_almost_chordless: maximum degree exceeds 3");
  if (!is_almost_chordless(g)) throw PreconditionError("three_edge_color_almost_chordless: more than one chord edge");
  ColoringStats local;
  ColoringStats& st = stats ? *stats : local;
  EdgeColoring c = detail::AlmostChordlessColorer(st).solve(g);
  if (!verify_edge_coloring(g, c) || colors_used(c) > 3) throw InternalError("three_edge_color_almost_chordless: result not proper");
  return c;
}

// ---------------------------------------------------------------------------
// 3-colouring of wheel-free planar graphs

struct ThreeColorOptions {
  WheelSearchOptions wheel;
};

namespace detail {

class WheelFreeColorer {
 public:
  explicit WheelFreeColorer(ColoringStats& stats) : stats_(stats) {}

  VertexColoring solve(const Graph& h) {
    const int n = h.vertex_count();
    if (n == 0) return {};
    if (auto c = split_components(h)) return checked(h, std::move(c));
    if (auto c = split_clique_cutset(h)) return checked(h, std::move(c));
    for (int u = 0; u < n; ++u)
      if (h.degree(u) <= 2) return checked(h, extend_low_degree(h, u));
    if (is_3_connected(h)) return checked(h, via_line_graph(h));
    return checked(h, via_two_cut(h));
  }

 private:
  VertexColoring checked(const Graph& h, std::optional<VertexColoring> c) {
    if (c && verify_vertex_coloring(h, *c) && colors_used(*c) <= 3) return std::move(*c);
    return fallback(h);
  }

  VertexColoring fallback(const Graph& h) {
    ++stats_.vertex_fallbacks;
    stats_.fallback_instances.push_back("vertex:" + write_graph6(h));
    auto c = backtrack_vertex_coloring(h, 3);
    if (!c) throw InternalError("wheel-free planar graph without a 3-colouring: " + write_graph6(h));
    return *c;
  }

  std::optional<VertexColoring> split_components(const Graph& h) {
    const auto comps = connected_components(h);
    if (comps.size() < 2) return std::nullopt;
    ++stats_.s1;
    VertexColoring out(static_cast<std::size_t>(h.vertex_count()), 0);
    for (const VertexSet& p : comps) {
      const Subgraph sub = induced_subgraph(h, p);
      const VertexColoring c = solve(sub.graph);
      for (std::size_t i = 0; i < c.size(); ++i) out[sub.original[i]] = c[i];
    }
    return out;
  }

  // Clique cutset K: colour G[C1 + K] and G[rest + K], rename the second
  // palette to agree on K.
  std::optional<VertexColoring> split_clique_cutset(const Graph& h) {
    const auto cut = find_clique_cutset(h, 3);
    if (!cut) return std::nullopt;
    ++stats_.s1;
    VertexSet k(h.vertex_count());
    for (int v : cut->clique) k.insert(v);
    const VertexSet first = cut->components.front() | k;
    const VertexSet second = (h.all_vertices() - cut->components.front());
    const Subgraph a = induced_subgraph(h, first);
    const Subgraph b = induced_subgraph(h, second);
    const VertexColoring ca = solve(a.graph);
    VertexColoring cb = solve(b.graph);
    const auto la = a.local_index(h.vertex_count());
    const auto lb = b.local_index(h.vertex_count());
    std::vector<std::pair<int, int>> cons;
    for (int v : cut->clique) cons.emplace_back(cb[lb[v]], ca[la[v]]);
    const auto p = palette_matching(cons);
    if (!p) return std::nullopt;
    repaint(cb, *p);
    VertexColoring out(static_cast<std::size_t>(h.vertex_count()), 0);
    for (std::size_t i = 0; i < ca.size(); ++i) out[a.original[i]] = ca[i];
    for (std::size_t i = 0; i < cb.size(); ++i) out[b.original[i]] = cb[i];
    return out;
  }

  std::optional<VertexColoring> extend_low_degree(const Graph& h, int u) {
    ++stats_.s2;
    VertexSet rest = h.all_vertices();
    rest.erase(u);
    const Subgraph sub = induced_subgraph(h, rest);
    const VertexColoring c = solve(sub.graph);
    VertexColoring out(static_cast<std::size_t>(h.vertex_count()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) out[sub.original[i]] = c[i];
    std::array<bool, 4> used{};
    for (int w : h.neighbors(u)) used[out[w]] = true;
    for (int col = 1; col <= 3; ++col)
      if (!used[col]) {
        out[u] = col;
        return out;
      }
    return std::nullopt;
  }

  // 3-connected: h = L(H) with H chordless of maximum degree three, so a
  // 3-edge-colouring of H is a 3-colouring of h.
  std::optional<VertexColoring> via_line_graph(const Graph& h) {
    ++stats_.s3;
    const auto root = root_of_triangle_free_line_graph(h);
    if (!root) return std::nullopt;
    EdgeColoring ec;
    try {
      ec = three_edge_color_almost_chordless(root->root, &stats_);
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
    VertexColoring out(static_cast<std::size_t>(h.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v) out[v] = ec.at(root->edge_of[v]);
    return out;
  }

  // Connectivity two. Take the 2-cut {a, b} whose smallest component C is
  // smallest; G_C = G[C + {a, b}] + ab with ab subdivided by m is a line
  // graph L(H). Two colourings of G[C + {a, b}] come from H: a != b via a
  // 3-edge-colouring of H/m, and a == b via H - {m_a, m_b} + a1b1. The rest
  // G - C is coloured recursively and the matching variant merged in.
  std::optional<VertexColoring> via_two_cut(const Graph& h) {
    ++stats_.s4;
    const int n = h.vertex_count();
    int best_order = n + 1;
    VertexSet best_comp(n);
    int a = -1, b = -1;
    for (auto [p, q] : two_cuts(h)) {
      VertexSet rest = h.all_vertices();
      rest.erase(p);
      rest.erase(q);
      for (const VertexSet& c : connected_components(h, rest))
        if (c.size() < best_order) {
          best_order = c.size();
          best_comp = c;
          a = p;
          b = q;
        }
    }
    if (a < 0 || h.has_edge(a, b)) return std::nullopt;

    VertexSet side = best_comp;
    side.insert(a);
    side.insert(b);
    const Subgraph part = induced_subgraph(h, side);
    const auto loc = part.local_index(n);
    Graph gc = part.graph;
    gc.add_edge(loc[a], loc[b]);
    gc = subdivide_edge(gc, Edge(loc[a], loc[b]));
    const int m = part.graph.vertex_count();

    const auto root = root_of_triangle_free_line_graph(gc);
    if (!root) return std::nullopt;
    const Graph& H = root->root;
    const Edge em = root->edge_of[m], ea = root->edge_of[loc[a]], eb = root->edge_of[loc[b]];
    const int ma = ea.touches(em.u) ? em.u : em.v;
    const int mb = em.other(ma);
    if (!eb.touches(mb) || ea.touches(mb) || eb.touches(ma)) return std::nullopt;
    const int a1 = ea.other(ma), b1 = eb.other(mb);

    auto transfer = [&](const EdgeColoring& ec) {
      VertexColoring out(static_cast<std::size_t>(m), 0);
      for (int v = 0; v < m; ++v) out[v] = ec.at(root->edge_of[v]);
      return out;
    };

    std::optional<VertexColoring> distinct, equal;
    try {
      // H/m, extended by a colour for m missing at a and b.
      const Contraction hm = contract_edge(H, em);
      EdgeColoring small = three_edge_color_almost_chordless(hm.graph, &stats_);
      EdgeColoring ec;
      for (const Edge& e : H.edges())
        if (e != em) ec[e] = small.at(Edge(hm.vertex_map[e.u], hm.vertex_map[e.v]));
      for (int col = 1; col <= 3; ++col)
        if (col != ec.at(ea) && col != ec.at(eb)) {
          ec[em] = col;
          break;
        }
      if (ec.size() == static_cast<std::size_t>(H.edge_count()) && verify_edge_coloring(H, ec)) distinct = transfer(ec);

      // H - {m_a, m_b} + a1 b1, edge a1b1 normalised to colour 1.
      if (!H.has_edge(a1, b1)) {
        Graph hp = H;
        for (const Edge& e : {em, ea, eb}) hp.remove_edge(e.u, e.v);
        hp.add_edge(a1, b1);
        VertexSet keep = hp.all_vertices();
        keep.erase(ma);
        keep.erase(mb);
        const Subgraph hs = induced_subgraph(hp, keep);
        const auto hl = hs.local_index(H.vertex_count());
        EdgeColoring c2 = three_edge_color_almost_chordless(hs.graph, &stats_);
        const auto p = palette_matching({{c2.at(Edge(hl[a1], hl[b1])), 1}});
        repaint(c2, *p);
        EdgeColoring ec2;
        for (const auto& [e, col] : c2) {
          const Edge orig(hs.original[e.u], hs.original[e.v]);
          if (orig != Edge(a1, b1)) ec2[orig] = col;
        }
        ec2[ea] = 1;
        ec2[eb] = 1;
        ec2[em] = 2;
        if (verify_edge_coloring(H, ec2)) equal = transfer(ec2);
      }
    } catch (const PreconditionError&) {
      return std::nullopt;
    }

    const Subgraph rest = induced_subgraph(h, h.all_vertices() - best_comp);
    const VertexColoring cr = solve(rest.graph);
    const auto rl = rest.local_index(n);
    const int ra = cr[rl[a]], rb = cr[rl[b]];
    std::optional<VertexColoring>& pick = ra == rb ? equal : distinct;
    if (!pick) return std::nullopt;
    VertexColoring cc = *pick;
    const auto p = palette_matching({{cc[loc[a]], ra}, {cc[loc[b]], rb}});
    if (!p) return std::nullopt;
    repaint(cc, *p);
    VertexColoring out(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < cr.size(); ++i) out[rest.original[i]] = cr[i];
    for (int i = 0; i < m; ++i) out[part.original[i]] = cc[i];
    return out;
  }

  ColoringStats& stats_;
};

}  // namespace detail

/// Proper 3-colouring of a wheel-free planar graph by the structural
/// recursion: clique cutset, vertex of degree at most two, 3-connected line
/// graph case, and the 2-cut case. Planarity and wheel-freeness are checked
/// first (the latter within the wheel-search budget).
inline VertexColoring three_color_wheel_free_planar(const Graph& g, ThreeColorOptions opts = {},
                                                    ColoringStats* stats = nullptr) {
  if (!is_planar(g)) throw PreconditionError("three_color_wheel_free_planar: graph is not planar");
  const WheelSearch ws = find_wheel(g, opts.wheel);
  if (ws.status == SearchStatus::found) throw WheelFoundError(*ws.witness);
  if (ws.status == SearchStatus::unknown) throw BudgetExceeded("three_color_wheel_free_planar: wheel check ran out of budget");
  ColoringStats local;
  ColoringStats& st = stats ? *stats : local;
  VertexColoring c = detail::WheelFreeColorer(st).solve(g);
  if (!verify_vertex_coloring(g, c) || colors_used(c) > 3) throw InternalError("three_color_wheel_free_planar: result not proper");
  return c;
}

}  // namespace wheelfree
