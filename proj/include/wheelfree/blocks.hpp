#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "wheelfree/graph.hpp"

namespace wheelfree {

/// Biconnected blocks, cut vertices and bridges from one Hopcroft-Tarjan pass.
struct BlockStructure {
  std::vector<VertexSet> blocks;    // each block's vertex set; bridges are 2-vertex blocks
  VertexSet cut_vertices;
  std::vector<Edge> bridges;        // lexicographic order
};

inline BlockStructure block_structure(const Graph& g) {
  const int n = g.vertex_count();
  BlockStructure out;
  out.cut_vertices = VertexSet(n);
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        ++children;
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0 || children > 1) out.cut_vertices.insert(v);
          VertexSet block(n);
          int edges_in_block = 0;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            ++edges_in_block;
            if (e == Edge(v, w)) break;
          }
          if (edges_in_block == 1) out.bridges.emplace_back(v, w);
          out.blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  std::sort(out.bridges.begin(), out.bridges.end());
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

inline VertexSet cut_vertices(const Graph& g) { return block_structure(g).cut_vertices; }
inline std::vector<Edge> bridges(const Graph& g) { return block_structure(g).bridges; }

}  // namespace wheelfree
