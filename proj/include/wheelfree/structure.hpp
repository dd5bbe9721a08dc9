#pragma once

#include <array>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wheelfree/connectivity.hpp"
#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/isomorphism.hpp"
#include "wheelfree/linegraph.hpp"
#include "wheelfree/named.hpp"
#include "wheelfree/patterns.hpp"
#include "wheelfree/planar.hpp"
#include "wheelfree/transform.hpp"

namespace wheelfree {

enum class Tristate { no, yes, unknown };

inline const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::no: return "false";
    case Tristate::yes: return "true";
    case Tristate::unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Basic graphs

enum class BasicKind { k23, subdivided_cubic };

/// Replayable evidence that g is basic: g = L(root) exactly, and the root is
/// K_{2,3} or the full subdivision of `cubic`.
struct BasicRealization {
  BasicKind kind = BasicKind::k23;
  KrauszRoot root;
  Graph cubic;  // 3-connected cubic planar R' (subdivided_cubic only)
};

struct BasicVerdict {
  bool is_basic = false;
  std::string reason;  // failing condition, or the realisation kind
  std::optional<BasicRealization> realization;
};

namespace detail {
inline IsomorphismOptions uncapped(const Graph& a) { return {std::max(a.vertex_count(), 16)}; }
}  // namespace detail

/// Rebuilds the basic graph a realisation describes and checks it against g.
inline bool replay_realization(const Graph& g, const BasicRealization& r) {
  if (!verify_root(g, r.root)) return false;
  const Graph expected = r.kind == BasicKind::k23 ? named::complete_bipartite(2, 3) : subdivide_all(r.cubic);
  return is_isomorphic(r.root.root, expected, detail::uncapped(expected));
}

/// Tests the definition directly: reconstruct the root, then accept K_{2,3}
/// or a root whose degree-2 suppression is cubic, 3-connected and planar and
/// whose full subdivision gives the root back.
inline BasicVerdict is_basic_by_definition(const Graph& g) {
  if (g.vertex_count() == 0) return {false, "empty graph", std::nullopt};
  auto root = root_of_triangle_free_line_graph(g);
  if (!root) return {false, "contains a claw or a diamond", std::nullopt};
  const Graph& h = root->root;
  const Graph k23 = named::complete_bipartite(2, 3);
  if (is_isomorphic(h, k23, detail::uncapped(h)))
    return {true, "root is K23", BasicRealization{BasicKind::k23, *root, {}}};
  Graph cubic;
  try {
    cubic = suppress_degree2(h);
  } catch (const PreconditionError&) {
    return {false, "root has a branch of length one or parallel branches", std::nullopt};
  }
  if (cubic.vertex_count() < 4 || cubic.min_degree() != 3 || cubic.max_degree() != 3)
    return {false, "suppressed root is not cubic", std::nullopt};
  if (!is_3_connected(cubic)) return {false, "suppressed root is not 3-connected", std::nullopt};
  if (!is_planar(cubic)) return {false, "suppressed root is not planar", std::nullopt};
  if (!is_isomorphic(subdivide_all(cubic), h, detail::uncapped(h)))
    return {false, "root is not the full subdivision of its suppression", std::nullopt};
  return {true, "root is a subdivided 3-connected cubic planar graph",
          BasicRealization{BasicKind::subdivided_cubic, *root, cubic}};
}

/// 3-connected, planar, and free of K4, claw, diamond and butterfly.
inline bool is_basic_by_characterization(const Graph& g) {
  for (PatternKind k : {PatternKind::claw, PatternKind::diamond, PatternKind::K4, PatternKind::butterfly})
    if (find_pattern(g, k)) return false;
  return is_3_connected(g) && is_planar(g);
}

/// 3-connected, planar, wheel-free line graph. Wheel-free excludes K4, so
/// claw- and diamond-freeness certify a line graph (of a triangle-free root).
/// `unknown` only when the wheel search runs out of budget.
inline Tristate is_basic_by_class(const Graph& g, WheelSearchOptions opts = {}) {
  if (!is_3_connected(g) || !is_planar(g)) return Tristate::no;
  if (find_pattern(g, PatternKind::claw) || find_pattern(g, PatternKind::diamond)) return Tristate::no;
  switch (find_wheel(g, opts).status) {
    case SearchStatus::found: return Tristate::no;
    case SearchStatus::absent: return Tristate::yes;
    case SearchStatus::unknown: return Tristate::unknown;
  }
  return Tristate::unknown;
}

/// Membership in the class of 3-connected wheel-free planar graphs.
inline Tristate in_class(const Graph& g, WheelSearchOptions opts = {}) {
  if (!is_3_connected(g) || !is_planar(g)) return Tristate::no;
  switch (find_wheel(g, opts).status) {
    case SearchStatus::found: return Tristate::no;
    case SearchStatus::absent: return Tristate::yes;
    case SearchStatus::unknown: return Tristate::unknown;
  }
  return Tristate::unknown;
}

// ---------------------------------------------------------------------------
// Gluing

using Triangle = std::array<int, 3>;

struct GlueResult {
  Graph graph;
  std::vector<int> second_map;  // vertex of g2 -> vertex of the result
};

/// Identifies t1[i] with t2[i]. Vertices of g1 keep their indices; the
/// remaining vertices of g2 follow in ascending order.
inline GlueResult glue(const Graph& g1, Triangle t1, const Graph& g2, Triangle t2) {
  auto check = [](const Graph& g, const Triangle& t, const char* which) {
    for (int v : t)
      if (v < 0 || v >= g.vertex_count()) throw PreconditionError(std::string("glue: ") + which + " triangle vertex out of range");
    if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2]))
      throw PreconditionError(std::string("glue: ") + which + " triangle is not a triangle");
    if (!is_3_connected(g)) throw PreconditionError(std::string("glue: ") + which + " graph is not 3-connected");
    if (!triangle_is_face(g, t)) throw PreconditionError(std::string("glue: ") + which + " triangle is not a face");
  };
  check(g1, t1, "first");
  check(g2, t2, "second");

  const int n1 = g1.vertex_count();
  GlueResult out;
  out.second_map.assign(static_cast<std::size_t>(g2.vertex_count()), -1);
  for (int i = 0; i < 3; ++i) out.second_map[t2[i]] = t1[i];
  int next = n1;
  for (int v = 0; v < g2.vertex_count(); ++v)
    if (out.second_map[v] < 0) out.second_map[v] = next++;
  out.graph = Graph(next);
  for (const Edge& e : g1.edges()) out.graph.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) out.graph.add_edge(out.second_map[e.u], out.second_map[e.v]);
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition trees

struct DecompositionNode {
  enum class Kind { leaf, glue };
  Kind kind = Kind::leaf;
  Graph graph;                // leaf: a basic graph
  int left = -1, right = -1;  // glue: child node indices
  Triangle left_triangle{};   // glue: the shared triangle in the left child's replay numbering
  Triangle right_triangle{};  // ... and in the right child's, position by position
};

/// Leaves are basic graphs; replaying every gluing bottom-up gives a graph
/// whose vertex i is input vertex vertex_map[i].
struct DecompositionTree {
  std::vector<DecompositionNode> nodes;
  int root = -1;
  std::vector<int> vertex_map;

  int leaf_count() const {
    int c = 0;
    for (const auto& nd : nodes) c += nd.kind == DecompositionNode::Kind::leaf;
    return c;
  }
};

inline Graph replay(const DecompositionTree& t, int node) {
  if (node < 0 || node >= static_cast<int>(t.nodes.size())) throw PreconditionError("replay: bad node index");
  const DecompositionNode& nd = t.nodes[node];
  if (nd.kind == DecompositionNode::Kind::leaf) return nd.graph;
  return glue(replay(t, nd.left), nd.left_triangle, replay(t, nd.right), nd.right_triangle).graph;
}

inline Graph replay(const DecompositionTree& t) { return replay(t, t.root); }

struct DecomposeOptions {
  WheelSearchOptions wheel;
};

namespace detail {

struct Built {
  int node;
  std::vector<int> to_piece;  // replay index -> piece vertex
};

inline Built build_decomposition(DecompositionTree& tree, const Graph& piece) {
  const auto cut = find_clique_cutset(piece, 3);
  if (!cut) {
    const BasicVerdict v = is_basic_by_definition(piece);
    if (!v.is_basic) throw InternalError("decompose: leaf is not basic (" + v.reason + ")");
    tree.nodes.push_back({DecompositionNode::Kind::leaf, piece, -1, -1, {}, {}});
    std::vector<int> id(static_cast<std::size_t>(piece.vertex_count()));
    for (int i = 0; i < piece.vertex_count(); ++i) id[i] = i;
    return {static_cast<int>(tree.nodes.size()) - 1, id};
  }
  if (cut->clique.size() != 3) throw InternalError("decompose: piece is not 3-connected");
  const VertexSet& split = cut->components.front();
  VertexSet left_set = piece.all_vertices() - split;
  VertexSet right_set = split;
  for (int v : cut->clique) right_set.insert(v);
  const Subgraph left = induced_subgraph(piece, left_set);
  const Subgraph right = induced_subgraph(piece, right_set);
  const Built lb = build_decomposition(tree, left.graph);
  const Built rb = build_decomposition(tree, right.graph);

  auto replay_index = [](const Subgraph& sub, const Built& b, int piece_vertex) {
    for (std::size_t i = 0; i < b.to_piece.size(); ++i)
      if (sub.original[b.to_piece[i]] == piece_vertex) return static_cast<int>(i);
    throw InternalError("decompose: triangle vertex lost");
  };
  DecompositionNode nd;
  nd.kind = DecompositionNode::Kind::glue;
  nd.left = lb.node;
  nd.right = rb.node;
  for (int i = 0; i < 3; ++i) {
    nd.left_triangle[i] = replay_index(left, lb, cut->clique[i]);
    nd.right_triangle[i] = replay_index(right, rb, cut->clique[i]);
  }
  tree.nodes.push_back(nd);

  // Replay numbering mirrors glue(): left child first, then the right
  // child's non-triangle vertices in ascending order.
  Built out{static_cast<int>(tree.nodes.size()) - 1, {}};
  for (int i : lb.to_piece) out.to_piece.push_back(left.original[i]);
  for (std::size_t j = 0; j < rb.to_piece.size(); ++j) {
    const int j_int = static_cast<int>(j);
    if (j_int == nd.right_triangle[0] || j_int == nd.right_triangle[1] || j_int == nd.right_triangle[2]) continue;
    out.to_piece.push_back(right.original[rb.to_piece[j]]);
  }
  return out;
}

}  // namespace detail

/// Splits a 3-connected wheel-free planar graph along triangle cutsets down
/// to basic leaves. With more than two components, the component with the
/// least vertex is split off (right child) and the remainder recursed on
/// (left child). Every leaf is verified basic; a failure throws InternalError.
inline DecompositionTree decompose(const Graph& g, DecomposeOptions opts = {}) {
  if (!is_3_connected(g)) throw PreconditionError("decompose: graph is not 3-connected");
  if (!is_planar(g)) throw PreconditionError("decompose: graph is not planar");
  const WheelSearch ws = find_wheel(g, opts.wheel);
  if (ws.status == SearchStatus::unknown) throw BudgetExceeded("decompose: wheel check ran out of budget");
  if (ws.status == SearchStatus::found) throw PreconditionError("decompose: graph contains a wheel: " + wheel_certificate(*ws.witness));
  DecompositionTree tree;
  const auto built = detail::build_decomposition(tree, g);
  tree.root = built.node;
  tree.vertex_map = built.to_piece;
  return tree;
}

namespace detail {

inline nlohmann::json node_to_json(const DecompositionTree& t, int node) {
  const DecompositionNode& nd = t.nodes[node];
  if (nd.kind == DecompositionNode::Kind::leaf) return {{"kind", "leaf"}, {"graph6", write_graph6(nd.graph)}};
  return {{"kind", "glue"},
          {"left_triangle", nd.left_triangle},
          {"right_triangle", nd.right_triangle},
          {"left", node_to_json(t, nd.left)},
          {"right", node_to_json(t, nd.right)}};
}

inline int node_from_json(DecompositionTree& t, const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  DecompositionNode nd;
  if (kind == "leaf") {
    nd.graph = read_graph6(j.at("graph6").get<std::string>());
  } else if (kind == "glue") {
    nd.kind = DecompositionNode::Kind::glue;
    nd.left = node_from_json(t, j.at("left"));
    nd.right = node_from_json(t, j.at("right"));
    nd.left_triangle = j.at("left_triangle").get<Triangle>();
    nd.right_triangle = j.at("right_triangle").get<Triangle>();
  } else {
    throw ParseError("decomposition: unknown node kind '" + kind + "'");
  }
  t.nodes.push_back(std::move(nd));
  return static_cast<int>(t.nodes.size()) - 1;
}

}  // namespace detail

inline nlohmann::json tree_to_json(const DecompositionTree& t) {
  return {{"format", "wheelfree-decomposition"},
          {"leaves", t.leaf_count()},
          {"vertex_map", t.vertex_map},
          {"root", detail::node_to_json(t, t.root)}};
}

inline DecompositionTree tree_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != "wheelfree-decomposition") throw ParseError("decomposition: wrong format tag");
    DecompositionTree t;
    t.root = detail::node_from_json(t, j.at("root"));
    t.vertex_map = j.at("vertex_map").get<std::vector<int>>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("decomposition: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Seed catalog

struct CatalogEntry {
  std::string name;
  Graph seed;   // 3-connected cubic planar graph, or K_{2,3}
  Graph basic;  // L(subdivide_all(seed)), or L(K_{2,3})
};

inline CatalogEntry make_catalog_entry(std::string name, const Graph& cubic) {
  if (cubic.vertex_count() < 4 || cubic.min_degree() != 3 || cubic.max_degree() != 3 || !is_3_connected(cubic) ||
      !is_planar(cubic))
    throw PreconditionError("catalog seed '" + name + "' is not a 3-connected cubic planar graph");
  return {std::move(name), cubic, line_graph(subdivide_all(cubic)).graph};
}

inline std::vector<CatalogEntry> seed_catalog() {
  const Graph k23 = named::complete_bipartite(2, 3);
  return {make_catalog_entry("K4", named::complete(4)),
          make_catalog_entry("prism", named::prism()),
          make_catalog_entry("cube", named::cube()),
          {"K23", k23, line_graph(k23).graph}};
}

/// Extra seeds from a graph6 stream of 3-connected cubic planar graphs,
/// named `<prefix><line number>`.
inline std::vector<CatalogEntry> import_catalog(std::istream& in, const std::string& prefix = "import") {
  std::vector<CatalogEntry> out;
  int i = 0;
  for (const Graph& g : read_graph6_stream(in)) out.push_back(make_catalog_entry(prefix + std::to_string(i++), g));
  return out;
}

inline const CatalogEntry& catalog_lookup(const std::vector<CatalogEntry>& cat, const std::string& name) {
  for (const auto& e : cat)
    if (e.name == name) return e;
  throw PreconditionError("unknown seed name '" + name + "'");
}

}  // namespace wheelfree
