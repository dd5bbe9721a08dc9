#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"

namespace wheelfree {

struct IsomorphismOptions {
  int max_vertices = 16;  // refuse larger inputs; internal callers raise it
};

namespace detail {

// Colour refinement on the disjoint union of two graphs so that colours are
// comparable across both sides. Colours are renumbered by sorted signature,
// which makes the result independent of vertex numbering.
class JointRefiner {
 public:
  JointRefiner(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.vertex_count()) {}

  // Refines `colour` (size 2n) to a stable partition in place.
  void refine(std::vector<int>& colour) const {
    const int total = 2 * n_;
    while (true) {
      std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(total));
      for (int x = 0; x < total; ++x) {
        sig[x].first = colour[x];
        const Graph& g = x < n_ ? a_ : b_;
        const int off = x < n_ ? 0 : n_;
        for (int w : g.neighbors(x - off)) sig[x].second.push_back(colour[w + off]);
        std::sort(sig[x].second.begin(), sig[x].second.end());
      }
      std::map<std::pair<int, std::vector<int>>, int> ids;
      for (const auto& s : sig) ids.emplace(s, 0);
      int next = 0;
      for (auto& [k, id] : ids) id = next++;
      std::vector<int> fresh(static_cast<std::size_t>(total));
      for (int x = 0; x < total; ++x) fresh[x] = ids.at(sig[x]);
      const int before = count_classes(colour);
      colour = std::move(fresh);
      if (count_classes(colour) == before) return;
    }
  }

  // Both halves must carry identical colour histograms.
  bool balanced(const std::vector<int>& colour) const {
    std::vector<int> ha(colour.begin(), colour.begin() + n_), hb(colour.begin() + n_, colour.end());
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    return ha == hb;
  }

  bool search(std::vector<int> colour) const {
    refine(colour);
    if (!balanced(colour)) return false;
    // Target cell: smallest non-singleton colour class.
    std::map<int, int> cell_size;
    for (int x = 0; x < n_; ++x) ++cell_size[colour[x]];
    int target = -1;
    int best = n_ + 1;
    for (auto [c, sz] : cell_size)
      if (sz > 1 && sz < best) {
        best = sz;
        target = c;
      }
    if (target < 0) return discrete_match(colour);
    int pick = -1;
    for (int x = 0; x < n_ && pick < 0; ++x)
      if (colour[x] == target) pick = x;
    const int fresh = *std::max_element(colour.begin(), colour.end()) + 1;
    for (int y = n_; y < 2 * n_; ++y) {
      if (colour[y] != target) continue;
      std::vector<int> next = colour;
      next[pick] = fresh;
      next[y] = fresh;
      if (search(std::move(next))) return true;
    }
    return false;
  }

 private:
  static int count_classes(const std::vector<int>& colour) {
    std::vector<int> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  bool discrete_match(const std::vector<int>& colour) const {
    std::map<int, int> of_colour;
    for (int y = n_; y < 2 * n_; ++y) of_colour[colour[y]] = y - n_;
    for (const Edge& e : a_.edges())
      if (!b_.has_edge(of_colour.at(colour[e.u]), of_colour.at(colour[e.v]))) return false;
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
};

}  // namespace detail

/// True iff an adjacency-preserving bijection exists.
///
/// Colour refinement with individualization; exact, exponential in the worst
/// case. Inputs above `opts.max_vertices` are refused.
inline bool is_isomorphic(const Graph& a, const Graph& b, IsomorphismOptions opts = {}) {
  if (a.vertex_count() > opts.max_vertices || b.vertex_count() > opts.max_vertices)
    throw PreconditionError("is_isomorphic: size cap of " + std::to_string(opts.max_vertices) + " vertices exceeded");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  if (n == 0) return true;
  std::vector<int> colour(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < n; ++x) {
    colour[x] = a.degree(x);
    colour[x + n] = b.degree(x);
  }
  return detail::JointRefiner(a, b).search(std::move(colour));
}

}  // namespace wheelfree
