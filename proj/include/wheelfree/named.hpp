#pragma once

#include "wheelfree/graph.hpp"

// Small named graphs used as seeds, patterns and fixtures.
namespace wheelfree::named {

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// Path on n vertices (length n-1).
inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// K_{a,b}: part A is 0..a-1.
inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

/// K_{1,k} with centre 0.
inline Graph star(int k) { return complete_bipartite(1, k); }

/// Rim 0..k-1, centre k.
inline Graph wheel(int k) {
  Graph g = Graph(k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(i, k);
  }
  return g;
}

/// Triangles 0-1-2 and 3-4-5 joined by i -- i+3.
inline Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

/// The 3-cube Q3 on bit strings 0..7.
inline Graph cube() {
  Graph g(8);
  for (int v = 0; v < 8; ++v)
    for (int b = 1; b < 8; b <<= 1)
      if ((v ^ b) > v) g.add_edge(v, v ^ b);
  return g;
}

/// K_{2,2,2}; antipodal pairs are {0,1}, {2,3}, {4,5}.
inline Graph octahedron() {
  Graph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != (u ^ 1)) g.add_edge(u, v);
  return g;
}

/// Claw K_{1,3}, centre 0.
inline Graph claw() { return star(3); }

/// K4 minus edge 2-3; 0 and 1 are the degree-3 vertices.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

/// Two triangles sharing vertex 0.
inline Graph butterfly() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

/// Triangle 0-1-2 with pendant 3 attached to 0.
inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

/// Circulant graph on n vertices: i ~ i +- s for every s in steps.
inline Graph circulant(int n, std::initializer_list<int> steps) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int s : steps) g.add_edge(i, (i + s) % n);
  return g;
}

}  // namespace wheelfree::named
