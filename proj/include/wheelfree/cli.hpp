#pragma once

// Command implementations behind tools/wheelfree. Each command returns its
// stdout text, stderr text and exit status, so it can be driven in-process.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "wheelfree/coloring.hpp"
#include "wheelfree/connectivity.hpp"
#include "wheelfree/errors.hpp"
#include "wheelfree/generate.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/isomorphism.hpp"
#include "wheelfree/patterns.hpp"
#include "wheelfree/planar.hpp"
#include "wheelfree/structure.hpp"

namespace wheelfree::cli {

enum ExitCode : int { ok = 0, negative = 1, parse_error = 2, out_of_class = 3, budget = 4, internal = 5 };

struct Result {
  int exit_code = ok;
  std::string out;
  std::string err;
};

struct Options {
  GraphFormat format = GraphFormat::graph6;
  long budget_ms = 5000;
  bool json = false;
  unsigned threads = 1;
};

/// Hardware concurrency, capped by WHEELFREE_THREADS when set.
inline unsigned default_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WHEELFREE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// FNV-1a (64-bit) of the graph6 encoding.
inline std::string digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : write_graph6(g)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

inline double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

inline WheelSearchOptions wheel_options(const Options& o) {
  return {std::chrono::milliseconds(o.budget_ms), std::max(1u, o.threads)};
}

inline const char* class_name(int code) {
  switch (code) {
    case parse_error: return "parse";
    case out_of_class: return "out-of-class";
    case budget: return "budget";
    default: return "internal";
  }
}

// Runs a command body, mapping exceptions onto exit codes.
inline Result guarded(const std::string& command, const Options& o, const std::function<Result()>& body) {
  int code = internal;
  std::string message, certificate;
  try {
    return body();
  } catch (const WheelFoundError& e) {
    code = out_of_class;
    message = e.what();
    certificate = wheel_certificate(e.witness);
  } catch (const ParseError& e) {
    code = parse_error;
    message = e.what();
  } catch (const PreconditionError& e) {
    code = out_of_class;
    message = e.what();
  } catch (const BudgetExceeded& e) {
    code = budget;
    message = e.what();
  } catch (const std::exception& e) {
    code = internal;
    message = e.what();
  }
  Result r;
  r.exit_code = code;
  r.err = "error: " + message + "\n";
  if (!certificate.empty()) r.err += certificate + "\n";
  if (o.json) {
    json j{{"command", command}, {"error", {{"class", class_name(code)}, {"message", message}}}};
    if (!certificate.empty()) j["error"]["certificate"] = certificate;
    r.out = j.dump(2) + "\n";
  }
  return r;
}

inline int connectivity_level(const Graph& g) {
  int level = 0;
  for (int k = 1; k <= 3; ++k) {
    if (g.vertex_count() <= k || !is_k_connected(g, k)) break;
    level = k;
  }
  return level;
}

inline json stats_json(const ColoringStats& s) {
  return {{"edge", s.edge_fallbacks}, {"vertex", s.vertex_fallbacks}, {"instances", s.fallback_instances}};
}

inline json rules_json(const ColoringStats& s) {
  return {{"R1", s.r1}, {"R2", s.r2}, {"R3", s.r3}, {"R4", s.r4}, {"R5", s.r5}, {"R5_diamond", s.r5_diamond},
          {"S1", s.s1}, {"S2", s.s2}, {"S3", s.s3}, {"S4", s.s4}};
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Planarity, connectivity, patterns, wheel, clique cutset and the three
/// basic-graph tests. Exit 0 when the graph is planar and wheel-free, 1 when
/// it is not, 4 when the wheel search ran out of budget.
inline Result cmd_check(const std::string& path, const Options& o) {
  return detail::guarded("check", o, [&] {
    using detail::json;
    const auto t0 = detail::Clock::now();
    const Graph g = read_graph_file(path, o.format);
    std::ostringstream text;
    json j{{"command", "check"}, {"input_digest", digest(g)}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
    json timings;
    text << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << " digest=" << digest(g) << '\n';

    auto t = detail::Clock::now();
    const auto emb = planarity(g);
    timings["planarity"] = detail::ms_since(t);
    text << "planar: " << (emb ? "yes" : "no") << '\n';
    j["planar"] = emb.has_value();
    if (emb) j["embedding"] = write_embedding(*emb);

    const int level = detail::connectivity_level(g);
    text << "connectivity: " << level << '\n';
    j["connectivity"] = level;

    t = detail::Clock::now();
    json patterns = json::object();
    for (PatternKind k : all_pattern_kinds) {
      const auto hit = find_pattern(g, k);
      const std::string name(pattern_name(k));
      text << "pattern " << name << ": " << (hit ? pattern_certificate(k, *hit) : "absent") << '\n';
      patterns[name] = hit ? json(pattern_certificate(k, *hit)) : json(nullptr);
    }
    timings["patterns"] = detail::ms_since(t);
    j["patterns"] = patterns;

    t = detail::Clock::now();
    const WheelSearch ws = find_wheel(g, detail::wheel_options(o));
    timings["wheel"] = detail::ms_since(t);
    std::string wheel_text = "absent";
    if (ws.status == SearchStatus::found) wheel_text = wheel_certificate(*ws.witness);
    if (ws.status == SearchStatus::unknown) wheel_text = "unknown (budget " + std::to_string(o.budget_ms) + " ms)";
    text << "wheel: " << wheel_text << '\n';
    j["wheel"] = {{"status", ws.status == SearchStatus::found ? "found" : ws.status == SearchStatus::absent ? "absent" : "unknown"},
                  {"nodes", ws.nodes}};
    if (ws.witness) j["wheel"]["certificate"] = wheel_certificate(*ws.witness);

    const auto cut = find_clique_cutset(g, 3);
    text << "clique-cutset: " << (cut ? cutset_certificate(*cut) : "none") << '\n';
    j["clique_cutset"] = cut ? json(cutset_certificate(*cut)) : json(nullptr);

    t = detail::Clock::now();
    const BasicVerdict def = is_basic_by_definition(g);
    const bool chr = is_basic_by_characterization(g);
    const Tristate cls = is_basic_by_class(g, detail::wheel_options(o));
    timings["basic"] = detail::ms_since(t);
    text << "basic-by-definition: " << (def.is_basic ? "yes" : "no") << " (" << def.reason << ")\n";
    text << "basic-by-characterization: " << (chr ? "yes" : "no") << '\n';
    text << "basic-by-class: " << (cls == Tristate::yes ? "yes" : cls == Tristate::no ? "no" : "unknown") << '\n';
    j["basic"] = {{"definition", def.is_basic}, {"reason", def.reason}, {"characterization", chr}, {"class", to_string(cls)}};
    if (def.realization) j["basic"]["root_certificate"] = root_certificate(def.realization->root);

    Result r;
    std::string verdict;
    if (!emb) {
      verdict = "not planar";
      r.exit_code = negative;
    } else if (ws.status == SearchStatus::found) {
      verdict = "contains a wheel";
      r.exit_code = negative;
    } else if (ws.status == SearchStatus::unknown) {
      verdict = "unknown";
      r.exit_code = budget;
    } else {
      verdict = "wheel-free planar";
    }
    text << "verdict: " << verdict << '\n';
    j["verdict"] = verdict;
    timings["total"] = detail::ms_since(t0);
    j["timings_ms"] = timings;
    r.out = o.json ? j.dump(2) + "\n" : text.str();
    return r;
  });
}

/// 3-colouring of a wheel-free planar graph as `v color` lines.
inline Result cmd_color(const std::string& path, const Options& o) {
  return detail::guarded("color", o, [&] {
    const auto t0 = detail::Clock::now();
    const Graph g = read_graph_file(path, o.format);
    ColoringStats stats;
    const VertexColoring c = three_color_wheel_free_planar(g, {detail::wheel_options(o)}, &stats);
    const bool ok = verify_vertex_coloring(g, c);
    Result r;
    r.exit_code = ok ? ExitCode::ok : internal;
    if (o.json) {
      r.out = detail::json{{"command", "color"},
                           {"input_digest", digest(g)},
                           {"coloring", c},
                           {"colors", colors_used(c)},
                           {"verified", ok},
                           {"fallbacks", detail::stats_json(stats)},
                           {"rules", detail::rules_json(stats)},
                           {"timings_ms", {{"total", detail::ms_since(t0)}}}}
                  .dump(2) +
              "\n";
    } else {
      r.out = write_vertex_coloring(c) + "# colors: " + std::to_string(colors_used(c)) +
              "\n# verified: " + (ok ? "yes" : "no") + "\n";
    }
    return r;
  });
}

/// 3-edge-colouring of an almost chordless subcubic graph as `u v color`.
inline Result cmd_edge_color(const std::string& path, const Options& o) {
  return detail::guarded("edge-color", o, [&] {
    const auto t0 = detail::Clock::now();
    const Graph g = read_graph_file(path, o.format);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > 3)
        throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    const auto chords = chord_edges(g);
    if (chords.size() > 1) {
      std::string list = "CHORDS";
      for (const Edge& e : chords) list += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
      throw PreconditionError("graph is not almost chordless: " + list);
    }
    ColoringStats stats;
    const EdgeColoring c = three_edge_color_almost_chordless(g, &stats);
    const bool ok = verify_edge_coloring(g, c);
    Result r;
    r.exit_code = ok ? ExitCode::ok : internal;
    if (o.json) {
      detail::json lines = detail::json::array();
      for (const auto& [e, col] : c) lines.push_back({e.u, e.v, col});
      r.out = detail::json{{"command", "edge-color"},
                           {"input_digest", digest(g)},
                           {"coloring", lines},
                           {"colors", colors_used(c)},
                           {"verified", ok},
                           {"fallbacks", detail::stats_json(stats)},
                           {"rules", detail::rules_json(stats)},
                           {"timings_ms", {{"total", detail::ms_since(t0)}}}}
                  .dump(2) +
              "\n";
    } else {
      r.out = write_edge_coloring(c) + "# colors: " + std::to_string(colors_used(c)) +
              "\n# verified: " + (ok ? "yes" : "no") + "\n";
    }
    return r;
  });
}

/// Decomposition tree of a 3-connected wheel-free planar graph (JSON).
inline Result cmd_decompose(const std::string& path, const Options& o) {
  return detail::guarded("decompose", o, [&] {
    const auto t0 = detail::Clock::now();
    const Graph g = read_graph_file(path, o.format);
    const DecompositionTree tree = decompose(g, {detail::wheel_options(o)});
    Result r;
    if (o.json) {
      r.out = detail::json{{"command", "decompose"},
                           {"input_digest", digest(g)},
                           {"tree", tree_to_json(tree)},
                           {"timings_ms", {{"total", detail::ms_since(t0)}}}}
                  .dump(2) +
              "\n";
    } else {
      r.out = tree_to_json(tree).dump(2) + "\n";
    }
    return r;
  });
}

/// Rebuilds the graph a tree describes (graph6). With `against`, also tests
/// isomorphism with that graph; exit 1 when they differ.
inline Result cmd_replay(const std::string& tree_path, const std::string& against, const Options& o) {
  return detail::guarded("replay", o, [&] {
    detail::json tj;
    try {
      tj = detail::json::parse(read_text_file(tree_path));
    } catch (const detail::json::exception& e) {
      throw ParseError(std::string("decomposition: ") + e.what());
    }
    // `decompose --json` wraps the tree; accept both shapes.
    if (tj.contains("tree")) tj = tj["tree"];
    const DecompositionTree tree = tree_from_json(tj);
    const Graph g = replay(tree);
    Result r;
    detail::json j{{"command", "replay"}, {"graph6", write_graph6(g)}, {"leaves", tree.leaf_count()}};
    std::string text = write_graph6(g) + "\n";
    if (!against.empty()) {
      const Graph h = read_graph_file(against, o.format);
      const bool iso = is_isomorphic(g, h, {std::max({16, g.vertex_count(), h.vertex_count()})});
      text += std::string("isomorphic: ") + (iso ? "yes" : "no") + "\n";
      j["isomorphic"] = iso;
      j["against_digest"] = digest(h);
      if (!iso) r.exit_code = negative;
    }
    r.out = o.json ? j.dump(2) + "\n" : text;
    return r;
  });
}

struct GenerateOptions {
  std::vector<std::string> names;
  int glues = 0;
  std::uint64_t rng = 0;
  int count = 1;
  std::string catalog_path;  // extra seeds (graph6 cubic planar graphs)
};

/// `count` class members as graph6 lines; member i uses rng seed rng + i.
inline Result cmd_generate(const GenerateOptions& go, const Options& o) {
  return detail::guarded("generate", o, [&] {
    std::vector<CatalogEntry> cat = seed_catalog();
    if (!go.catalog_path.empty()) {
      std::ifstream in(go.catalog_path);
      if (!in) throw ParseError("cannot open " + go.catalog_path);
      for (auto& e : import_catalog(in)) cat.push_back(std::move(e));
    }
    if (go.names.empty()) throw ParseError("generate: no seed names");
    for (const auto& name : go.names)
      if (std::none_of(cat.begin(), cat.end(), [&](const CatalogEntry& e) { return e.name == name; }))
        throw ParseError("unknown seed name '" + name + "'");
    if (go.glues < 0 || go.count < 0) throw ParseError("generate: negative count");
    std::string out;
    for (int i = 0; i < go.count; ++i)
      out += write_graph6(generate_member(cat, go.names, go.glues, go.rng + static_cast<std::uint64_t>(i))) + "\n";
    return Result{ok, out, ""};
  });
}

/// Checks a colouring file (`v color` or `u v color` lines, `#` comments)
/// against a graph. Exit 1 when improper or when more than `cap` colours
/// are used (cap 0: no limit).
inline Result cmd_verify(const std::string& graph_path, const std::string& coloring_path, int cap, const Options& o) {
  return detail::guarded("verify", o, [&] {
    const Graph g = read_graph_file(graph_path, o.format);
    std::istringstream in(read_text_file(coloring_path));
    std::vector<std::vector<long long>> rows;
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::vector<long long> row;
      for (long long x; ls >> x;) row.push_back(x);
      if (!ls.eof() || row.empty()) throw ParseError("coloring: bad line '" + line + "'");
      rows.push_back(std::move(row));
    }
    if (rows.empty() && g.vertex_count() > 0) throw ParseError("coloring: empty file");
    const std::size_t width = rows.empty() ? 2 : rows.front().size();
    for (const auto& row : rows)
      if (row.size() != width || (width != 2 && width != 3)) throw ParseError("coloring: inconsistent line widths");

    bool proper = false;
    int used = 0;
    std::string kind;
    auto in_range = [&](long long v) { return v >= 0 && v < g.vertex_count(); };
    if (width == 2) {
      kind = "vertex";
      VertexColoring c(static_cast<std::size_t>(g.vertex_count()), 0);
      for (const auto& row : rows) {
        if (!in_range(row[0])) throw ParseError("coloring: vertex out of range");
        if (c[row[0]] != 0) throw ParseError("coloring: vertex listed twice");
        c[row[0]] = static_cast<int>(row[1]);
      }
      if (static_cast<long>(rows.size()) != g.vertex_count())
        throw PreconditionError("vertex colouring is not total");
      proper = verify_vertex_coloring(g, c);
      used = colors_used(c);
    } else {
      kind = "edge";
      EdgeColoring c;
      for (const auto& row : rows) {
        if (!in_range(row[0]) || !in_range(row[1]) || row[0] == row[1]) throw ParseError("coloring: bad edge");
        if (!c.emplace(Edge(static_cast<int>(row[0]), static_cast<int>(row[1])), static_cast<int>(row[2])).second)
          throw ParseError("coloring: edge listed twice");
      }
      proper = verify_edge_coloring(g, c);
      used = colors_used(c);
    }
    const bool within = cap <= 0 || used <= cap;
    Result r;
    r.exit_code = proper && within ? ok : negative;
    if (o.json) {
      r.out = detail::json{{"command", "verify"}, {"input_digest", digest(g)}, {"kind", kind},
                           {"proper", proper},    {"colors", used},           {"within_cap", within}}
                  .dump(2) +
              "\n";
    } else {
      r.out = kind + " coloring: " + (proper ? "proper" : "improper") + "\ncolors: " + std::to_string(used) + "\n";
      if (cap > 0) r.out += std::string("within cap ") + std::to_string(cap) + ": " + (within ? "yes" : "no") + "\n";
    }
    return r;
  });
}

}  // namespace wheelfree::cli
