#pragma once

#include <polyforge/multigraph.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyforge {

// graph6 encoding of a simple graph: byte 63+n for n <= 62 (the ~-prefixed
// long forms are accepted on decode), then the upper triangle in column-major
// order packed 6 bits per byte, each offset by 63.
inline std::string graph6_encode(const Multigraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("graph6 encodes simple graphs only");
  int n = g.num_vertices();
  if (n > 62) throw std::invalid_argument("graph6 encoder limited to n <= 62");
  std::vector<std::vector<char>> adj(size_t(n), std::vector<char>(size_t(n), 0));
  for (const Edge& e : g.edges()) adj[size_t(e.u)][size_t(e.v)] = adj[size_t(e.v)][size_t(e.u)] = 1;
  std::string out;
  out.push_back(char(63 + n));
  int bit = 5;
  unsigned char cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (adj[size_t(i)][size_t(j)]) cur |= (unsigned char)(1u << bit);
      if (--bit < 0) {
        out.push_back(char(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  if (n >= 2 && bit != 5) out.push_back(char(cur + 63));
  return out;
}

inline Multigraph graph6_decode(const std::string& s) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (pos + k > s.size()) throw std::invalid_argument("graph6 string truncated");
  };
  need(1);
  long long n;
  if (s[pos] == 126) {
    ++pos;
    need(1);
    if (s[pos] == 126) {
      ++pos;
      need(6);
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | (s[pos++] - 63);
    } else {
      need(3);
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | (s[pos++] - 63);
    }
  } else {
    n = s[pos++] - 63;
  }
  if (n < 0 || n > 512) throw std::invalid_argument("graph6 order out of supported range");
  Multigraph g(static_cast<int>(n));
  long long bits_needed = n * (n - 1) / 2;
  long long bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != bytes_needed)
    throw std::invalid_argument("graph6 length mismatch for order " + std::to_string(n));
  int bit = 5;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int c = s[pos] - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6 byte out of range");
      if (c >> bit & 1) g.add_edge(i, j);
      if (--bit < 0) {
        bit = 5;
        ++pos;
      }
    }
  return g;
}

// Edge-list text format: first line "n m", then m lines "u v" (0-based),
// loops as "u u".
inline Multigraph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++lineno;
      auto h = line.find('#');
      if (h != std::string::npos) line = line.substr(0, h);
      bool blank = true;
      for (char c : line)
        if (!isspace((unsigned char)c)) blank = false;
      if (!blank) return line;
    }
    throw std::invalid_argument("unexpected end of edge-list input at line " +
                                std::to_string(lineno));
  };
  std::istringstream head(next_line());
  int n, m;
  if (!(head >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("bad header line in edge list");
  Multigraph g(n);
  for (int k = 0; k < m; ++k) {
    std::istringstream ls(next_line());
    int u, v;
    if (!(ls >> u >> v))
      throw std::invalid_argument("bad edge at line " + std::to_string(lineno));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("endpoint out of range at line " + std::to_string(lineno));
    g.add_edge(u, v);
  }
  return g;
}

inline Multigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string emit_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

inline std::vector<Multigraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph6 file: " + path);
  std::vector<Multigraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

}  // namespace polyforge
