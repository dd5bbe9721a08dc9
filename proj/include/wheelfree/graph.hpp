#pragma once

#include <algorithm>
#include <compare>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wheelfree/errors.hpp"
#include "wheelfree/vertex_set.hpp"

namespace wheelfree {

/// Undirected edge with canonical ordering u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool touches(int x) const { return u == x || v == x; }
  /// Endpoint opposite to x; x must be an endpoint.
  int other(int x) const { return x == u ? v : u; }
  bool shares_endpoint(const Edge& o) const { return touches(o.u) || touches(o.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.u << '-' << e.v; }
};

/// Finite simple undirected graph on vertices {0, ..., n-1}.
///
/// Adjacency is stored as one VertexSet per vertex. Every transformation in
/// this library returns a new graph with compacted indices; provenance is
/// returned alongside as an index map.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
    if (n < 0) throw PreconditionError("negative vertex count");
  }
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }
  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  const VertexSet& neighbors(int v) const { return adj_[check(v)]; }
  int degree(int v) const { return adj_[check(v)].size(); }
  bool has_edge(int a, int b) const { return a != b && adj_[check(a)].contains(check(b)); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
    return out;
  }

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  /// Adds edge ab. Loops are rejected; an existing edge is left unchanged.
  void add_edge(int a, int b) {
    check(a);
    check(b);
    if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
    if (adj_[a].contains(b)) return;
    adj_[a].insert(b);
    adj_[b].insert(a);
    ++m_;
  }

  void remove_edge(int a, int b) {
    if (!has_edge(a, b)) throw PreconditionError("not an edge");
    adj_[a].erase(b);
    adj_[b].erase(a);
    --m_;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int check(int v) const {
    if (v < 0 || v >= n_)
      throw PreconditionError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    return v;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/// A graph extracted from a larger one, with original vertex indices.
struct Subgraph {
  Graph graph;
  std::vector<int> original;  // original[i] is the parent index of vertex i

  /// Parent index -> local index, -1 if absent.
  std::vector<int> local_index(int parent_n) const {
    std::vector<int> loc(static_cast<std::size_t>(parent_n), -1);
    for (std::size_t i = 0; i < original.size(); ++i) loc[original[i]] = static_cast<int>(i);
    return loc;
  }
};

}  // namespace wheelfree
