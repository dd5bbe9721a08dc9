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
#include "wheelfree/transform.hpp"

namespace wheelfree {

/// Combinatorial embedding as a rotation system.
///
/// rotation[v] lists the neighbours of v in cyclic order. Face traversal: on
/// arriving at v from u, leave towards the successor of u in rotation[v].
struct Embedding {
  std::vector<std::vector<int>> rotation;

  int vertex_count() const { return static_cast<int>(rotation.size()); }
};

/// Closed walk bounding a face (a simple cycle when the graph is 2-connected).
using Face = std::vector<int>;

namespace detail {

// Faces of a biconnected graph (n >= 3) as consistently oriented cycles, or
// nullopt when the graph is not planar. Path addition: start from a cycle
// and repeatedly embed a path of some fragment into an admissible face,
// preferring fragments with a single admissible face.
inline std::optional<std::vector<std::vector<int>>> embed_biconnected(const Graph& s) {
  const int n = s.vertex_count();
  if (s.edge_count() > 3 * n - 6) return std::nullopt;

  // Initial cycle via DFS back edge.
  std::vector<int> parent(static_cast<std::size_t>(n), -2), depth(static_cast<std::size_t>(n), 0);
  std::vector<int> cycle;
  {
    std::vector<int> stack{0};
    parent[0] = -1;
    std::vector<int> order;
    std::vector<std::size_t> iter(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nbrs[v] = s.neighbors(v).to_vector();
    while (!stack.empty() && cycle.empty()) {
      const int v = stack.back();
      if (iter[v] == nbrs[v].size()) {
        stack.pop_back();
        continue;
      }
      const int w = nbrs[v][iter[v]++];
      if (w == parent[v]) continue;
      if (parent[w] == -2) {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        stack.push_back(w);
      } else if (depth[w] < depth[v]) {
        for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
      }
    }
  }
  if (cycle.size() < 3) throw InternalError("embed_biconnected: no cycle in a biconnected block");

  Graph placed(n);
  VertexSet placed_v(n);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    placed.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    placed_v.insert(cycle[i]);
  }
  std::vector<std::vector<int>> faces{cycle, std::vector<int>(cycle.rbegin(), cycle.rend())};
  std::vector<VertexSet> face_sets{VertexSet::of(n, cycle), VertexSet::of(n, cycle)};

  while (placed.edge_count() < s.edge_count()) {
    struct Fragment {
      VertexSet body;          // unplaced vertices (empty for a chord)
      VertexSet attachments;
      Edge chord;
    };
    std::vector<Fragment> frags;
    for (const VertexSet& comp : connected_components(s, placed_v.complement())) {
      VertexSet att(n);
      for (int v : comp) att |= s.neighbors(v);
      att &= placed_v;
      frags.push_back({comp, att, {}});
    }
    for (int u : placed_v) {
      const VertexSet missing = (s.neighbors(u) & placed_v) - placed.neighbors(u);
      for (int v = missing.next(u + 1); v >= 0; v = missing.next(v + 1))
        frags.push_back({VertexSet(n), VertexSet(n, {u, v}), Edge(u, v)});
    }

    int chosen = -1;
    int chosen_face = -1;
    for (std::size_t i = 0; i < frags.size(); ++i) {
      int count = 0;
      int first = -1;
      for (std::size_t f = 0; f < faces.size(); ++f)
        if (frags[i].attachments.is_subset_of(face_sets[f])) {
          if (first < 0) first = static_cast<int>(f);
          ++count;
        }
      if (count == 0) return std::nullopt;
      if (count == 1 || chosen < 0) {
        const bool forced = count == 1;
        chosen = static_cast<int>(i);
        chosen_face = first;
        if (forced) break;
      }
    }

    // Path through the chosen fragment between two attachments.
    const Fragment& fr = frags[chosen];
    std::vector<int> path;
    if (fr.body.empty()) {
      path = {fr.chord.u, fr.chord.v};
    } else {
      const int a = fr.attachments.first();
      const int b = fr.attachments.next(a + 1);
      std::vector<int> prev(static_cast<std::size_t>(n), -1);
      VertexSet seen = s.neighbors(a) & fr.body;
      std::vector<int> queue = seen.to_vector();
      for (int q : queue) prev[q] = a;
      int end = -1;
      for (std::size_t qi = 0; qi < queue.size() && end < 0; ++qi) {
        const int v = queue[qi];
        if (s.has_edge(v, b)) {
          end = v;
          break;
        }
        for (int w : s.neighbors(v) & fr.body) {
          if (seen.contains(w)) continue;
          seen.insert(w);
          prev[w] = v;
          queue.push_back(w);
        }
      }
      if (end < 0) throw InternalError("embed_biconnected: fragment path not found");
      path.push_back(b);
      for (int v = end; v != a; v = prev[v]) path.push_back(v);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }

    // Split the face along the path.
    const std::vector<int> face = faces[chosen_face];
    const int len = static_cast<int>(face.size());
    const int a = path.front();
    const int b = path.back();
    const int ia = static_cast<int>(std::find(face.begin(), face.end(), a) - face.begin());
    const int ib = static_cast<int>(std::find(face.begin(), face.end(), b) - face.begin());
    std::vector<int> f1, f2;
    for (int t = ia;; t = (t + 1) % len) {
      f1.push_back(face[t]);
      if (t == ib) break;
    }
    for (std::size_t t = path.size() - 2; t >= 1; --t) f1.push_back(path[t]);
    for (int t = ib;; t = (t + 1) % len) {
      f2.push_back(face[t]);
      if (t == ia) break;
    }
    for (std::size_t t = 1; t + 1 < path.size(); ++t) f2.push_back(path[t]);

    faces[chosen_face] = f1;
    face_sets[chosen_face] = VertexSet::of(n, f1);
    faces.push_back(f2);
    face_sets.push_back(VertexSet::of(n, f2));
    for (std::size_t t = 0; t + 1 < path.size(); ++t) placed.add_edge(path[t], path[t + 1]);
    for (int v : path) placed_v.insert(v);
  }
  return faces;
}

// Rotation at each vertex from consistently oriented face cycles.
inline std::vector<std::vector<int>> rotation_from_faces(const Graph& s, const std::vector<std::vector<int>>& faces) {
  const int n = s.vertex_count();
  std::vector<std::map<int, int>> succ(static_cast<std::size_t>(n));
  for (const auto& f : faces) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i) succ[f[(i + 1) % k]][f[i]] = f[(i + 2) % k];
  }
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int start = s.neighbors(v).first();
    if (start < 0) continue;
    int x = start;
    do {
      rot[v].push_back(x);
      auto it = succ[v].find(x);
      if (it == succ[v].end()) throw InternalError("rotation_from_faces: incomplete rotation");
      x = it->second;
    } while (x != start && rot[v].size() <= static_cast<std::size_t>(s.degree(v)));
    if (static_cast<int>(rot[v].size()) != s.degree(v)) throw InternalError("rotation_from_faces: rotation is not a single cycle");
  }
  return rot;
}

inline std::vector<int> normalize_walk(const std::vector<int>& walk) {
  std::vector<int> best;
  const std::size_t k = walk.size();
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> w = walk;
    if (dir == 1) std::reverse(w.begin(), w.end());
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<int> cand(k);
      for (std::size_t i = 0; i < k; ++i) cand[i] = w[(r + i) % k];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

// Oriented face walks of a rotation system (unnormalised).
inline std::vector<std::vector<int>> trace_faces(const Embedding& e) {
  const int n = e.vertex_count();
  std::vector<std::map<int, int>> pos(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < e.rotation[v].size(); ++i) pos[v][e.rotation[v][i]] = static_cast<int>(i);
  std::map<std::pair<int, int>, bool> used;
  std::vector<std::vector<int>> out;
  for (int u = 0; u < n; ++u) {
    for (int v : e.rotation[u]) {
      if (used[{u, v}]) continue;
      std::vector<int> walk;
      int a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        walk.push_back(a);
        auto it = pos[b].find(a);
        if (it == pos[b].end()) throw PreconditionError("embedding: rotation is not symmetric");
        const auto& rb = e.rotation[b];
        const int c = rb[(static_cast<std::size_t>(it->second) + 1) % rb.size()];
        a = b;
        b = c;
      }
      if (a != u || b != v) throw PreconditionError("embedding: face traversal does not close");
      out.push_back(std::move(walk));
    }
  }
  return out;
}

}  // namespace detail

/// Graph underlying a rotation system; throws on asymmetric rotations.
inline Graph embedding_graph(const Embedding& e) {
  Graph g(e.vertex_count());
  for (int v = 0; v < e.vertex_count(); ++v)
    for (int w : e.rotation[v]) {
      if (w < 0 || w >= e.vertex_count() || w == v) throw PreconditionError("embedding: bad neighbour");
      g.add_edge(v, w);
    }
  for (int v = 0; v < e.vertex_count(); ++v)
    if (g.degree(v) != static_cast<int>(e.rotation[v].size())) throw PreconditionError("embedding: repeated neighbour");
  return g;
}

/// Normalised face list. Each walk starts at its least vertex and heads to the
/// lesser of its two possible successors; faces are sorted. Throws when the
/// Euler count n - m + f = 2 fails for some connected component.
inline std::vector<Face> faces(const Embedding& e) {
  const Graph g = embedding_graph(e);
  auto walks = detail::trace_faces(e);
  const auto comps = connected_components(g);
  std::vector<int> comp_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> face_count(comps.size(), 0);
  for (const auto& w : walks) ++face_count[comp_of[w.front()]];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Subgraph sub = induced_subgraph(g, comps[c]);
    const int f = sub.graph.edge_count() == 0 ? 1 : face_count[c];
    if (sub.graph.vertex_count() - sub.graph.edge_count() + f != 2)
      throw PreconditionError("embedding: Euler check failed (not a planar rotation system)");
  }
  std::vector<Face> out;
  for (const auto& w : walks) out.push_back(detail::normalize_walk(w));
  std::sort(out.begin(), out.end());
  return out;
}

/// A planar rotation system for g, or nullopt when g is not planar.
inline std::optional<Embedding> planarity(const Graph& g) {
  const int n = g.vertex_count();
  if (n >= 3 && g.edge_count() > 3 * n - 6) return std::nullopt;
  Embedding emb;
  emb.rotation.resize(static_cast<std::size_t>(n));
  for (const VertexSet& block : block_structure(g).blocks) {
    const Subgraph sub = induced_subgraph(g, block);
    if (sub.graph.vertex_count() == 2) {
      emb.rotation[sub.original[0]].push_back(sub.original[1]);
      emb.rotation[sub.original[1]].push_back(sub.original[0]);
      continue;
    }
    auto face_cycles = detail::embed_biconnected(sub.graph);
    if (!face_cycles) return std::nullopt;
    const auto rot = detail::rotation_from_faces(sub.graph, *face_cycles);
    // Blocks meeting at a cut vertex are spliced by concatenation, which
    // places each later block inside one angle of the earlier ones.
    for (int v = 0; v < sub.graph.vertex_count(); ++v)
      for (int w : rot[v]) emb.rotation[sub.original[v]].push_back(sub.original[w]);
  }
  faces(emb);  // Euler validation; throws on a bug
  return emb;
}

inline bool is_planar(const Graph& g) { return planarity(g).has_value(); }

/// Does triangle t bound a face? Requires g 3-connected and planar, where the
/// face set is unique, so any embedding answers.
inline bool triangle_is_face(const Graph& g, std::array<int, 3> t) {
  for (int v : t)
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("triangle_is_face: vertex out of range");
  if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2]))
    throw PreconditionError("triangle_is_face: not a triangle");
  if (!is_3_connected(g)) throw PreconditionError("triangle_is_face: graph is not 3-connected");
  const auto emb = planarity(g);
  if (!emb) throw PreconditionError("triangle_is_face: graph is not planar");
  std::sort(t.begin(), t.end());
  for (const Face& f : faces(*emb))
    if (f.size() == 3 && f[0] == t[0] && std::is_permutation(f.begin(), f.end(), t.begin())) return true;
  return false;
}

/// Facial triangles of a 3-connected planar graph, each sorted, in
/// lexicographic order.
inline std::vector<std::array<int, 3>> facial_triangles(const Graph& g) {
  const auto emb = planarity(g);
  if (!emb) throw PreconditionError("facial_triangles: graph is not planar");
  std::vector<std::array<int, 3>> out;
  for (const Face& f : faces(*emb)) {
    if (f.size() != 3) continue;
    std::array<int, 3> t{f[0], f[1], f[2]};
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// `v: n1 n2 ... nk` per vertex, neighbours in cyclic order.
inline std::string write_embedding(const Embedding& e) {
  std::ostringstream os;
  for (int v = 0; v < e.vertex_count(); ++v) {
    os << v << ':';
    for (int w : e.rotation[v]) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

inline Embedding read_embedding(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Embedding e;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int v = -1;
    char colon = 0;
    if (!(ls >> v >> colon) || colon != ':' || v != e.vertex_count()) throw ParseError("embedding: bad line '" + line + "'");
    std::vector<int> rot;
    for (int w; ls >> w;) rot.push_back(w);
    if (!ls.eof()) throw ParseError("embedding: bad line '" + line + "'");
    e.rotation.push_back(std::move(rot));
  }
  const int n = e.vertex_count();
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = e.rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError("embedding: repeated neighbour");
    for (int w : sorted) {
      if (w < 0 || w >= n || w == v) throw ParseError("embedding: neighbour out of range");
      const auto& back = e.rotation[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) throw ParseError("embedding: rotation is not symmetric");
    }
  }
  return e;
}

}  // namespace wheelfree
