#pragma once

#include <polyforge/multigraph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace polyforge {

// Simple graphs up to 12 vertices packed as (n, upper-triangle bitmask).
// Bit index for i<j is j*(j-1)/2 + i.
struct PackedGraph {
  int n = 0;
  uint64_t mask = 0;
  friend bool operator==(const PackedGraph& a, const PackedGraph& b) {
    return a.n == b.n && a.mask == b.mask;
  }
  friend bool operator<(const PackedGraph& a, const PackedGraph& b) {
    return a.n != b.n ? a.n < b.n : a.mask < b.mask;
  }
};

inline int tri_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

inline PackedGraph pack_graph(const Multigraph& g) {
  if (g.num_vertices() > 12) throw std::invalid_argument("pack_graph limited to 12 vertices");
  if (!g.is_simple()) throw std::invalid_argument("pack_graph needs a simple graph");
  PackedGraph p;
  p.n = g.num_vertices();
  for (const Edge& e : g.edges()) p.mask |= uint64_t(1) << tri_index(e.u, e.v);
  return p;
}

inline Multigraph unpack_graph(const PackedGraph& p) {
  Multigraph g(p.n);
  for (int j = 0; j < p.n; ++j)
    for (int i = 0; i < j; ++i)
      if (p.mask >> tri_index(i, j) & 1) g.add_edge(i, j);
  return g;
}

namespace detail {

// Iterated neighbor-color refinement. The resulting color ids are
// isomorphism-invariant, so permutations may be restricted to ones that keep
// each color class in place.
inline std::vector<int> wl_colors(const std::vector<uint16_t>& adj, int n) {
  std::vector<int> color(size_t(n), 0);
  for (int v = 0; v < n; ++v) color[size_t(v)] = __builtin_popcount(adj[size_t(v)]);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[size_t(v)]};
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (adj[size_t(v)] >> w & 1) nb.push_back(color[size_t(w)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[size_t(v)] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(static_cast<size_t>(n));
    int c = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
      next[size_t(sorted[i].second)] = c;
    }
    if (next == color) break;
    color = next;
  }
  return color;
}

// Minimum of `encode` over all permutations that permute vertices only within
// the given classes (classes listed in fixed order).
template <class Encode, class Out>
void min_over_class_perms(std::vector<int>& perm,
                          const std::vector<std::pair<int, int>>& ranges, Encode encode,
                          Out& best, bool& have) {
  std::function<void(size_t)> iterate = [&](size_t ri) {
    if (ri == ranges.size()) {
      Out cur = encode(perm);
      if (!have || cur < best) {
        best = std::move(cur);
        have = true;
      }
      return;
    }
    auto [b, e] = ranges[ri];
    std::sort(perm.begin() + b, perm.begin() + e);
    do {
      iterate(ri + 1);
    } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
  };
  iterate(0);
}

}  // namespace detail

// Canonical form of a simple graph (n <= 12): minimal packed adjacency over
// all permutations respecting the WL color classes.
inline PackedGraph canonical_form(const Multigraph& g) {
  int n = g.num_vertices();
  if (!g.is_simple()) throw std::invalid_argument("canonical_form needs a simple graph");
  if (n <= 1) return pack_graph(g);
  std::vector<uint16_t> adj(size_t(n), 0);
  for (const Edge& e : g.edges()) {
    adj[size_t(e.u)] |= uint16_t(1) << e.v;
    adj[size_t(e.v)] |= uint16_t(1) << e.u;
  }
  std::vector<int> color = detail::wl_colors(adj, n);
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return color[size_t(a)] != color[size_t(b)] ? color[size_t(a)] < color[size_t(b)] : a < b;
  });
  std::vector<std::pair<int, int>> ranges;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[size_t(perm[size_t(j)])] == color[size_t(perm[size_t(i)])]) ++j;
    ranges.push_back({i, j});
    i = j;
  }
  auto encode = [&](const std::vector<int>& pm) {
    uint64_t mask = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (adj[size_t(pm[size_t(i)])] >> pm[size_t(j)] & 1)
          mask |= uint64_t(1) << tri_index(i, j);
    return mask;
  };
  uint64_t best = 0;
  bool have = false;
  detail::min_over_class_perms(perm, ranges, encode, best, have);
  return PackedGraph{n, best};
}

inline bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (!a.is_simple() || !b.is_simple())
    throw std::invalid_argument("is_isomorphic covers simple graphs");
  return canonical_form(a) == canonical_form(b);
}

// Canonical byte key for a multigraph (loops and parallel edges), complete
// for n <= 10. Larger graphs throw: an incomplete key must never feed a memo.
inline std::string canonical_multigraph_key(const Multigraph& g) {
  int n = g.num_vertices();
  if (n > 10) throw std::invalid_argument("multigraph canonical key limited to 10 vertices");
  std::string head;
  head.push_back(char(n));
  head.push_back(char(g.num_edges() & 0xff));
  head.push_back(char((g.num_edges() >> 8) & 0xff));
  if (n == 0) return head;
  std::vector<std::vector<uint8_t>> mult(size_t(n), std::vector<uint8_t>(size_t(n), 0));
  std::vector<uint8_t> loops(size_t(n), 0);
  for (const Edge& e : g.edges()) {
    if (e.u == e.v)
      ++loops[size_t(e.u)];
    else {
      ++mult[size_t(e.u)][size_t(e.v)];
      ++mult[size_t(e.v)][size_t(e.u)];
    }
  }
  // vertex invariant: (loop count, sorted incident multiplicities)
  std::vector<std::pair<std::vector<int>, int>> inv(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> key{int(loops[size_t(v)])};
    std::vector<int> ms(mult[size_t(v)].begin(), mult[size_t(v)].end());
    std::sort(ms.begin(), ms.end());
    key.insert(key.end(), ms.begin(), ms.end());
    inv[size_t(v)] = {std::move(key), v};
  }
  std::sort(inv.begin(), inv.end());
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[size_t(i)] = inv[size_t(i)].second;
  std::vector<std::pair<int, int>> ranges;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[size_t(j)].first == inv[size_t(i)].first) ++j;
    ranges.push_back({i, j});
    i = j;
  }
  auto encode = [&](const std::vector<int>& pm) {
    std::string s;
    s.reserve(size_t(n) + size_t(n) * size_t(n - 1) / 2);
    for (int i = 0; i < n; ++i) s.push_back(char(loops[size_t(pm[size_t(i)])]));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i)
        s.push_back(char(mult[size_t(pm[size_t(i)])][size_t(pm[size_t(j)])]));
    return s;
  };
  std::string best;
  bool have = false;
  detail::min_over_class_perms(perm, ranges, encode, best, have);
  return head + best;
}

namespace detail {

struct GraphLists {
  std::vector<std::vector<PackedGraph>> all{{PackedGraph{0, 0}}, {PackedGraph{1, 0}}};
  std::mutex mu;
};

inline GraphLists& graph_lists() {
  static GraphLists gl;
  return gl;
}

}  // namespace detail

// All non-isomorphic simple graphs of order n, grown by extending each graph
// of order n-1 with a new vertex over every neighborhood, deduplicated by
// canonical form. Cached per process.
inline const std::vector<PackedGraph>& all_graphs(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("built-in graph lists cover n <= 8");
  auto& gl = detail::graph_lists();
  std::lock_guard<std::mutex> lock(gl.mu);
  while (int(gl.all.size()) <= n) {
    int k = int(gl.all.size());
    std::unordered_set<uint64_t> seen;
    std::vector<PackedGraph> next;
    for (const PackedGraph& base : gl.all[size_t(k - 1)]) {
      for (uint32_t nb = 0; nb < (uint32_t(1) << (k - 1)); ++nb) {
        Multigraph g(k);
        for (int j = 0; j < k - 1; ++j)
          for (int i = 0; i < j; ++i)
            if (base.mask >> tri_index(i, j) & 1) g.add_edge(i, j);
        for (int i = 0; i < k - 1; ++i)
          if (nb >> i & 1) g.add_edge(i, k - 1);
        PackedGraph cf = canonical_form(g);
        if (seen.insert(cf.mask).second) next.push_back(cf);
      }
    }
    std::sort(next.begin(), next.end());
    gl.all.push_back(std::move(next));
  }
  return gl.all[size_t(n)];
}

// Pairwise non-isomorphic connected simple graphs of order n, n <= 8.
inline std::vector<Multigraph> connected_graph_stream(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument(
        "connected_graph_stream covers 1 <= n <= 8; ingest a graph6 file beyond that");
  std::vector<Multigraph> out;
  for (const PackedGraph& p : all_graphs(n)) {
    Multigraph g = unpack_graph(p);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace polyforge
