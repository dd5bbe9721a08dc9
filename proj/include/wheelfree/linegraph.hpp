#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/patterns.hpp"

namespace wheelfree {

/// L(h) together with the edge behind each vertex.
struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of;  // vertex i of graph is edge edge_of[i] of h (lexicographic order)
};

inline LineGraph line_graph(const Graph& h) {
  LineGraph out;
  out.edge_of = h.edges();
  const int m = static_cast<int>(out.edge_of.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (out.edge_of[i].shares_endpoint(out.edge_of[j])) out.graph.add_edge(i, j);
  return out;
}

/// Root graph H with g = L(H) exactly: vertex v of g is edge edge_of[v] of H.
struct KrauszRoot {
  Graph root;
  std::vector<Edge> edge_of;

  /// Vertex of g carried by root edge e, or -1.
  int vertex_of(Edge e) const {
    auto it = std::find(edge_of.begin(), edge_of.end(), e);
    return it == edge_of.end() ? -1 : static_cast<int>(it - edge_of.begin());
  }
};

/// Exact correspondence check: u ~ v in g iff edge_of[u], edge_of[v] share an
/// endpoint, and edge_of is a bijection onto edges(root).
inline bool verify_root(const Graph& g, const KrauszRoot& r) {
  const int n = g.vertex_count();
  if (static_cast<int>(r.edge_of.size()) != n || r.root.edge_count() != n) return false;
  std::vector<Edge> sorted = r.edge_of;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const Edge& e : sorted)
    if (e.u < 0 || e.v >= r.root.vertex_count() || !r.root.has_edge(e.u, e.v)) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) != r.edge_of[u].shares_endpoint(r.edge_of[v])) return false;
  return true;
}

/// Root of a {claw, diamond}-free graph, or nullopt if g contains either.
///
/// In such a graph the maximal clique through an edge uv is
/// {u, v} + (N(u) & N(v)), and every vertex lies in at most two maximal
/// cliques. The root has one node per maximal clique (lexicographic order of
/// member lists) followed by one pendant node per vertex lying in fewer than
/// two cliques; vertex v becomes the edge joining its two nodes. A triangle
/// therefore yields K_{1,3}.
inline std::optional<KrauszRoot> root_of_triangle_free_line_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("root_of_triangle_free_line_graph: empty graph");
  if (find_pattern(g, PatternKind::claw) || find_pattern(g, PatternKind::diamond)) return std::nullopt;

  std::vector<VertexSet> cliques;
  for (const Edge& e : g.edges()) {
    VertexSet c = g.neighbors(e.u) & g.neighbors(e.v);
    c.insert(e.u);
    c.insert(e.v);
    cliques.push_back(std::move(c));
  }
  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());

  std::vector<std::vector<int>> nodes_of(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < cliques.size(); ++c)
    for (int v : cliques[c]) nodes_of[v].push_back(static_cast<int>(c));
  int next_node = static_cast<int>(cliques.size());
  for (int v = 0; v < n; ++v) {
    if (nodes_of[v].size() > 2) throw InternalError("root reconstruction: vertex in more than two cliques");
    while (nodes_of[v].size() < 2) nodes_of[v].push_back(next_node++);
  }

  KrauszRoot r;
  r.root = Graph(next_node);
  for (int v = 0; v < n; ++v) {
    r.edge_of.emplace_back(nodes_of[v][0], nodes_of[v][1]);
    r.root.add_edge(nodes_of[v][0], nodes_of[v][1]);
  }
  if (!verify_root(g, r)) throw InternalError("root reconstruction failed its exact-correspondence check");
  return r;
}

/// Edge list of the root followed by `MAP h_u h_v -> g_vertex` lines.
inline std::string root_certificate(const KrauszRoot& r) {
  std::ostringstream os;
  os << write_edge_list(r.root);
  for (std::size_t v = 0; v < r.edge_of.size(); ++v)
    os << "MAP " << r.edge_of[v].u << ' ' << r.edge_of[v].v << " -> " << v << '\n';
  return os.str();
}

inline KrauszRoot parse_root_certificate(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("root certificate: bad header");
  KrauszRoot r;
  r.root = Graph(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v) || u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("root certificate: bad edge");
    r.root.add_edge(u, v);
  }
  r.edge_of.assign(static_cast<std::size_t>(m), Edge{});
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (long long i = 0; i < m; ++i) {
    std::string tag, arrow;
    int u = 0, v = 0, x = 0;
    if (!(in >> tag >> u >> v >> arrow >> x) || tag != "MAP" || arrow != "->" || x < 0 || x >= m || seen[x])
      throw ParseError("root certificate: bad MAP line");
    seen[x] = true;
    r.edge_of[x] = Edge(u, v);
  }
  return r;
}

}  // namespace wheelfree
