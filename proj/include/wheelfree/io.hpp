#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wheelfree/errors.hpp"
#include "wheelfree/graph.hpp"

namespace wheelfree {

// graph6: N(n) followed by the upper triangle, column by column
// (x(0,1) x(0,2) x(1,2) x(0,3) ...), packed 6 bits per byte, each byte
// offset by 63. Bit order within a byte is most significant first.

inline std::string write_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

inline Graph read_graph6(std::string_view text) {
  // Optional header and surrounding whitespace are tolerated.
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");

  std::size_t pos = 0;
  auto take = [&]() -> long long {
    if (pos >= text.size()) throw ParseError("graph6: truncated size field");
    return text[pos++] - 63;
  };
  long long n = take();
  if (n == 63) {
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | take();
    } else {
      n = 0;
      for (int k = 0; k < 3; ++k) n = (n << 6) | take();
    }
  }
  const long long pairs = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " + std::to_string(text.size() - pos));
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (pairs % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - pairs % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

/// Edge-list text: first line `n m`, then m lines `u v`.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edgelist: bad header");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("edgelist: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edgelist: vertex out of range");
    if (u == v) throw ParseError("edgelist: loop");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) throw ParseError("edgelist: parallel edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw ParseError("edgelist: trailing data");
  return g;
}

inline Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

enum class GraphFormat { graph6, edgelist };

/// Every non-empty, non-comment line of a graph6 stream.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v = line;
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    if (v.empty() || v.front() == '#') continue;
    out.push_back(read_graph6(v));
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Single graph from a file; graph6 files must hold exactly one graph.
inline Graph read_graph_file(const std::string& path, GraphFormat format) {
  const std::string text = read_text_file(path);
  if (format == GraphFormat::edgelist) return read_edge_list(text);
  std::istringstream in(text);
  auto graphs = read_graph6_stream(in);
  if (graphs.size() != 1) throw ParseError(path + ": expected exactly one graph6 line, found " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

}  // namespace wheelfree
