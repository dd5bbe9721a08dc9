#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "wheelfree/blocks.hpp"
#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/named.hpp"

namespace wheelfree {

enum class PatternKind { claw, diamond, butterfly, paw, K4, K23 };

inline constexpr std::array<PatternKind, 6> all_pattern_kinds = {
    PatternKind::claw, PatternKind::diamond, PatternKind::butterfly,
    PatternKind::paw,  PatternKind::K4,      PatternKind::K23};

inline std::string_view pattern_name(PatternKind k) {
  switch (k) {
    case PatternKind::claw: return "claw";
    case PatternKind::diamond: return "diamond";
    case PatternKind::butterfly: return "butterfly";
    case PatternKind::paw: return "paw";
    case PatternKind::K4: return "K4";
    case PatternKind::K23: return "K23";
  }
  return "?";
}

inline PatternKind parse_pattern_kind(std::string_view name) {
  for (PatternKind k : all_pattern_kinds)
    if (pattern_name(k) == name) return k;
  throw ParseError("unknown pattern kind '" + std::string(name) + "'");
}

/// Reference graph of a pattern. The vertex order fixes the meaning of the
/// positions in a returned occurrence (e.g. the claw centre comes first).
inline Graph pattern_graph(PatternKind k) {
  switch (k) {
    case PatternKind::claw: return named::claw();
    case PatternKind::diamond: return named::diamond();
    case PatternKind::butterfly: return named::butterfly();
    case PatternKind::paw: return named::paw();
    case PatternKind::K4: return named::complete(4);
    case PatternKind::K23: return named::complete_bipartite(2, 3);
  }
  return {};
}

namespace detail {

// ESU enumeration of connected vertex sets of size k; `visit` returns false
// to stop.
inline void for_each_connected_subset(const Graph& g, int k,
                                      const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = g.vertex_count();
  std::vector<int> chosen;
  VertexSet in_sub(n), closed_nb(n);
  bool stop = false;

  std::function<void(VertexSet, int)> extend = [&](VertexSet ext, int root) {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == k) {
      if (!visit(chosen)) stop = true;
      return;
    }
    while (!ext.empty() && !stop) {
      const int w = ext.first();
      ext.erase(w);
      VertexSet fresh = g.neighbors(w) - closed_nb;
      fresh -= in_sub;
      VertexSet next_ext = ext;
      for (int x : fresh)
        if (x > root) next_ext.insert(x);
      const VertexSet saved_nb = closed_nb;
      chosen.push_back(w);
      in_sub.insert(w);
      closed_nb |= g.neighbors(w);
      closed_nb.insert(w);
      extend(next_ext, root);
      chosen.pop_back();
      in_sub.erase(w);
      closed_nb = saved_nb;
    }
  };

  for (int v = 0; v < n && !stop; ++v) {
    chosen = {v};
    in_sub = VertexSet(n);
    in_sub.insert(v);
    closed_nb = g.neighbors(v);
    closed_nb.insert(v);
    VertexSet ext(n);
    for (int x : g.neighbors(v))
      if (x > v) ext.insert(x);
    extend(ext, v);
  }
}

// Ordering of `subset` realising `pattern` as an induced subgraph, if any.
inline std::optional<std::vector<int>> match_induced(const Graph& g, std::vector<int> subset, const Graph& pattern) {
  const int k = pattern.vertex_count();
  int edges = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges += g.has_edge(subset[i], subset[j]);
  if (edges != pattern.edge_count()) return std::nullopt;
  std::sort(subset.begin(), subset.end());
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) ok = g.has_edge(subset[i], subset[j]) == pattern.has_edge(i, j);
    if (ok) return subset;
  } while (std::next_permutation(subset.begin(), subset.end()));
  return std::nullopt;
}

}  // namespace detail

/// Induced occurrence of `kind`, or nullopt. Among all occurrences the one
/// with lexicographically least sorted vertex set is returned, ordered so
/// that position i plays vertex i of pattern_graph(kind).
inline std::optional<std::vector<int>> find_pattern(const Graph& g, PatternKind kind) {
  const Graph pattern = pattern_graph(kind);
  std::optional<std::vector<int>> best_sorted, best;
  detail::for_each_connected_subset(g, pattern.vertex_count(), [&](const std::vector<int>& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (best_sorted && !(sorted < *best_sorted)) return true;
    if (auto m = detail::match_induced(g, sorted, pattern)) {
      best_sorted = sorted;
      best = std::move(m);
    }
    return true;
  });
  return best;
}

inline std::string pattern_certificate(PatternKind kind, const std::vector<int>& vertices) {
  std::ostringstream os;
  os << "PATTERN " << pattern_name(kind);
  for (int v : vertices) os << ' ' << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// Wheels

/// A wheel (centre, rim): rim is an induced cycle listed in cyclic order.
struct WheelWitness {
  int center = -1;
  std::vector<int> rim;

  friend bool operator==(const WheelWitness&, const WheelWitness&) = default;
};

/// Direct re-verification of a witness against g.
inline bool verify_wheel(const Graph& g, const WheelWitness& w) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(w.rim.size());
  if (k < 3 || w.center < 0 || w.center >= n) return false;
  VertexSet rim(n);
  for (int v : w.rim) {
    if (v < 0 || v >= n || rim.contains(v)) return false;
    rim.insert(v);
  }
  if (rim.contains(w.center)) return false;
  for (int i = 0; i < k; ++i) {
    const int v = w.rim[i];
    if (!g.has_edge(v, w.rim[(i + 1) % k])) return false;
    if ((g.neighbors(v) & rim).size() != 2) return false;  // no chords
  }
  return (g.neighbors(w.center) & rim).size() >= 3;
}

inline std::string wheel_certificate(const WheelWitness& w) {
  std::ostringstream os;
  os << "WHEEL " << w.center;
  for (int v : w.rim) os << ' ' << v;
  return os.str();
}

inline WheelWitness parse_wheel_certificate(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string tag;
  WheelWitness w;
  if (!(in >> tag) || tag != "WHEEL" || !(in >> w.center)) throw ParseError("bad WHEEL certificate");
  for (int v; in >> v;) w.rim.push_back(v);
  if (!in.eof()) throw ParseError("bad WHEEL certificate");
  return w;
}

struct WheelSearchOptions {
  std::chrono::milliseconds budget{5000};
  unsigned threads = 1;
};

enum class SearchStatus { found, absent, unknown };

struct WheelSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<WheelWitness> witness;
  long long nodes = 0;  // DFS states visited
};

namespace detail {

using Clock = std::chrono::steady_clock;

// Induced-cycle DFS for one centre. Cycles are rooted at a neighbour s of
// the centre; neighbours below s are excluded so each cycle is produced
// from its least centre-neighbour.
class CenterSearch {
 public:
  CenterSearch(const Graph& g, int center, Clock::time_point deadline, std::function<bool()> stop)
      : g_(g), n_(g.vertex_count()), center_(center), deadline_(deadline), stop_(std::move(stop)) {}

  // found / absent / unknown (deadline or cancellation).
  SearchStatus run() {
    const VertexSet& hub = g_.neighbors(center_);
    if (hub.size() < 3) return SearchStatus::absent;
    for (int s : hub) {
      allowed_ = g_.all_vertices();
      allowed_.erase(center_);
      for (int t : hub) {
        if (t >= s) break;
        allowed_.erase(t);
      }
      path_ = {s};
      on_path_ = VertexSet(n_);
      on_path_.insert(s);
      interior_closed_ = VertexSet(n_);
      if (!extend(1)) return aborted_ ? SearchStatus::unknown : SearchStatus::found;
    }
    return SearchStatus::absent;
  }

  const std::vector<int>& rim() const { return rim_; }
  long long nodes() const { return nodes_; }

 private:
  // Returns false to stop the search (found or aborted).
  bool extend(int hub_count) {
    if ((++nodes_ & 1023) == 0 && (stop_() || Clock::now() > deadline_)) {
      aborted_ = true;
      return false;
    }
    const int p0 = path_.front();
    const int pk = path_.back();
    const std::size_t k = path_.size() - 1;
    const VertexSet& hub = g_.neighbors(center_);

    VertexSet open = allowed_ - on_path_;
    open -= interior_closed_;
    if (k >= 1 && !feasible(open, hub_count)) return true;

    const VertexSet candidates = g_.neighbors(pk) & open;
    for (int w : candidates) {
      const int count = hub_count + (hub.contains(w) ? 1 : 0);
      if (k >= 1 && g_.has_edge(w, p0)) {
        if (count >= 3) {
          rim_ = path_;
          rim_.push_back(w);
          return false;
        }
        continue;
      }
      const VertexSet saved = interior_closed_;
      if (k >= 1) {
        interior_closed_ |= g_.neighbors(pk);
        interior_closed_.insert(pk);
      }
      path_.push_back(w);
      on_path_.insert(w);
      const bool go_on = extend(count);
      path_.pop_back();
      on_path_.erase(w);
      interior_closed_ = saved;
      if (!go_on) return false;
    }
    return true;
  }

  // Can the current path still close into an induced cycle carrying at
  // least three centre-neighbours?
  bool feasible(const VertexSet& open, int hub_count) const {
    const int p0 = path_.front();
    const int pk = path_.back();
    const VertexSet& hub = g_.neighbors(center_);
    const VertexSet closers = open & g_.neighbors(p0);
    const VertexSet inner = open - g_.neighbors(p0);
    VertexSet reached = g_.neighbors(pk) & inner;
    VertexSet frontier = reached;
    while (!frontier.empty()) {
      VertexSet next(n_);
      for (int v : frontier) next |= g_.neighbors(v);
      next &= inner;
      next -= reached;
      reached |= next;
      frontier = std::move(next);
    }
    VertexSet touch = g_.neighbors(pk);
    for (int v : reached) touch |= g_.neighbors(v);
    const VertexSet reachable_closers = closers & touch;
    if (reachable_closers.empty()) return false;
    const int bound = hub_count + (reached & hub).size() + ((reachable_closers & hub).empty() ? 0 : 1);
    return bound >= 3;
  }

  const Graph& g_;
  int n_;
  int center_;
  Clock::time_point deadline_;
  std::function<bool()> stop_;
  VertexSet allowed_, on_path_, interior_closed_;
  std::vector<int> path_, rim_;
  long long nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

/// Searches for an induced wheel.
///
/// Centres are tried in ascending order; for each centre the induced cycles of
/// G - centre through its neighbours are enumerated by a DFS over induced
/// paths, pruned by a reachability bound on the centre-neighbours still
/// collectable. The first witness of the least centre is returned, so the
/// result does not depend on `threads`. Wheel detection is NP-hard; when the
/// budget runs out the status is `unknown`, never `absent`.
inline WheelSearch find_wheel(const Graph& g, WheelSearchOptions opts = {}) {
  using detail::Clock;
  const auto deadline = Clock::now() + opts.budget;
  const int n = g.vertex_count();

  // Per-centre outcome; centres never started stay `unknown`.
  std::vector<SearchStatus> status(static_cast<std::size_t>(n), SearchStatus::unknown);
  std::vector<std::vector<int>> rims(static_cast<std::size_t>(n));
  std::atomic<int> next_center{0};
  std::atomic<int> best_center{n};
  std::atomic<long long> nodes{0};

  auto worker = [&]() {
    while (true) {
      const int c = next_center.fetch_add(1);
      if (c >= n || c > best_center.load() || Clock::now() > deadline) return;
      detail::CenterSearch search(g, c, deadline, [&best_center, c] { return best_center.load() < c; });
      const SearchStatus st = search.run();
      nodes += search.nodes();
      status[c] = st;
      if (st == SearchStatus::found) {
        rims[c] = search.rim();
        int cur = best_center.load();
        while (c < cur && !best_center.compare_exchange_weak(cur, c)) {
        }
      }
      if (st == SearchStatus::unknown && Clock::now() > deadline) return;
    }
  };

  const unsigned threads = std::clamp<unsigned>(opts.threads, 1u, static_cast<unsigned>(std::max(n, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  WheelSearch result;
  result.nodes = nodes.load();
  result.status = SearchStatus::absent;
  for (int c = 0; c < n; ++c) {
    if (status[c] == SearchStatus::absent) continue;
    result.status = status[c];
    if (status[c] == SearchStatus::found) result.witness = WheelWitness{c, rims[c]};
    break;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Chords

/// Every edge xy that is the chord of some cycle: x and y lie in a common
/// biconnected block of G - xy.
inline std::vector<Edge> chord_edges(const Graph& g) {
  std::vector<Edge> out;
  Graph h = g;
  for (const Edge& e : g.edges()) {
    h.remove_edge(e.u, e.v);
    const auto bs = block_structure(h);
    for (const VertexSet& b : bs.blocks)
      if (b.contains(e.u) && b.contains(e.v)) {
        out.push_back(e);
        break;
      }
    h.add_edge(e.u, e.v);
  }
  return out;
}

inline bool is_almost_chordless(const Graph& g) { return chord_edges(g).size() <= 1; }
inline bool is_chordless(const Graph& g) { return chord_edges(g).empty(); }

}  // namespace wheelfree
