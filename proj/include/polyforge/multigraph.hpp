#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyforge {

enum class EdgeKind { Loop, Bridge, Normal };

struct Edge {
  int id;
  int u;
  int v;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(size_t(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[size_t(x)] != x) {
      parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
      x = parent[size_t(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[size_t(a)] = b;
    return true;
  }
};

}  // namespace detail

// Undirected multigraph on vertices 0..n-1; loops and parallel edges allowed.
// Edge ids are stable: they survive deletions and contractions, so external
// weight maps keyed by id stay valid across minors. Values are immutable
// after construction; all minor operations return new graphs.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return int(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  int add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    int id = next_id_++;
    edges_.push_back({id, u, v});
    return id;
  }

  const Edge& edge(int id) const {
    for (const Edge& e : edges_)
      if (e.id == id) return e;
    throw std::invalid_argument("unknown edge id " + std::to_string(id));
  }
  bool has_edge_id(int id) const {
    for (const Edge& e : edges_)
      if (e.id == id) return true;
    return false;
  }

  Multigraph delete_edge(int id) const {
    edge(id);  // validates
    Multigraph g;
    g.n_ = n_;
    g.next_id_ = next_id_;
    for (const Edge& e : edges_)
      if (e.id != id) g.edges_.push_back(e);
    return g;
  }

  // Potts/Tutte contraction: identifies the ends of e; edges parallel to e
  // become loops; ids (and therefore weights) are untouched. Contracting a
  // loop is the same as deleting it. The vertex map old->new is reported
  // through vmap when given.
  Multigraph contract_edge_multi(int id, std::vector<int>* vmap = nullptr) const {
    const Edge& e = edge(id);
    if (e.u == e.v) {
      if (vmap) {
        vmap->resize(static_cast<size_t>(n_));
        std::iota(vmap->begin(), vmap->end(), 0);
      }
      return delete_edge(id);
    }
    int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
    std::vector<int> map(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) map[size_t(i)] = i < gone ? i : (i == gone ? keep : i - 1);
    if (vmap) *vmap = map;
    Multigraph g;
    g.n_ = n_ - 1;
    g.next_id_ = next_id_;
    for (const Edge& ed : edges_) {
      if (ed.id == id) continue;
      g.edges_.push_back({ed.id, map[size_t(ed.u)], map[size_t(ed.v)]});
    }
    return g;
  }

  // Chromatic-style contraction: contract, then drop loops and collapse each
  // parallel class to a single edge (the one with the smallest id).
  Multigraph contract_edge_simple(int id, std::vector<int>* vmap = nullptr) const {
    const Edge& e = edge(id);
    if (e.u == e.v) throw std::invalid_argument("cannot simple-contract a loop");
    return contract_edge_multi(id, vmap).simplify();
  }

  Multigraph simplify() const {
    Multigraph g;
    g.n_ = n_;
    g.next_id_ = next_id_;
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    std::vector<std::vector<char>> seen(size_t(n_), std::vector<char>(size_t(n_), 0));
    for (const Edge& e : sorted) {
      if (e.u == e.v) continue;
      if (seen[size_t(e.u)][size_t(e.v)]) continue;
      seen[size_t(e.u)][size_t(e.v)] = seen[size_t(e.v)][size_t(e.u)] = 1;
      g.edges_.push_back(e);
    }
    return g;
  }

  bool is_simple() const {
    std::vector<std::vector<char>> seen(size_t(n_), std::vector<char>(size_t(n_), 0));
    for (const Edge& e : edges_) {
      if (e.u == e.v) return false;
      if (seen[size_t(e.u)][size_t(e.v)]) return false;
      seen[size_t(e.u)][size_t(e.v)] = seen[size_t(e.v)][size_t(e.u)] = 1;
    }
    return true;
  }
  bool has_loop() const {
    for (const Edge& e : edges_)
      if (e.u == e.v) return true;
    return false;
  }

  // Component count of the spanning subgraph keeping the edges selected by
  // `keep` (all edges when keep is empty); isolated vertices count.
  int components(const std::vector<char>& keep = {}) const {
    detail::UnionFind uf(n_);
    int c = n_;
    for (size_t i = 0; i < edges_.size(); ++i) {
      if (!keep.empty() && !keep[i]) continue;
      if (uf.unite(edges_[i].u, edges_[i].v)) --c;
    }
    return c;
  }

  int components_of_ids(const std::vector<int>& edge_ids) const {
    std::vector<char> keep(edges_.size(), 0);
    for (int id : edge_ids) {
      bool found = false;
      for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) {
          keep[i] = 1;
          found = true;
        }
      if (!found) throw std::invalid_argument("unknown edge id in subset");
    }
    return components(keep);
  }

  bool is_connected() const { return n_ <= 1 || components() == 1; }

  EdgeKind classify_edge(int id) const {
    const Edge& e = edge(id);
    if (e.u == e.v) return EdgeKind::Loop;
    std::vector<char> keep(edges_.size(), 1);
    for (size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].id == id) keep[i] = 0;
    return components(keep) > components() ? EdgeKind::Bridge : EdgeKind::Normal;
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const Edge& e : edges_) {
      if (e.u == v) ++d;
      if (e.v == v) ++d;  // a loop contributes 2
    }
    return d;
  }

  // Blocks of the standard 2-connected-component decomposition, as edge-id
  // lists. Bridges are blocks; each loop forms its own block; isolated
  // vertices yield none.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n_));  // (neighbor, edge index)
    for (size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u == e.v) continue;
      adj[size_t(e.u)].push_back({e.v, int(i)});
      adj[size_t(e.v)].push_back({e.u, int(i)});
    }
    std::vector<std::vector<int>> out;
    std::vector<int> disc(size_t(n_), -1), low(size_t(n_), 0);
    std::vector<int> estack;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int pe) {
      disc[size_t(u)] = low[size_t(u)] = timer++;
      for (auto [w, ei] : adj[size_t(u)]) {
        if (ei == pe) continue;
        if (disc[size_t(w)] < 0) {
          estack.push_back(ei);
          dfs(w, ei);
          low[size_t(u)] = std::min(low[size_t(u)], low[size_t(w)]);
          if (low[size_t(w)] >= disc[size_t(u)]) {
            std::vector<int> blk;
            while (true) {
              int top = estack.back();
              estack.pop_back();
              blk.push_back(edges_[size_t(top)].id);
              if (top == ei) break;
            }
            out.push_back(std::move(blk));
          }
        } else if (disc[size_t(w)] < disc[size_t(u)]) {
          estack.push_back(ei);
          low[size_t(u)] = std::min(low[size_t(u)], disc[size_t(w)]);
        }
      }
    };
    for (int v = 0; v < n_; ++v)
      if (disc[size_t(v)] < 0) dfs(v, -1);
    for (const Edge& e : edges_)
      if (e.u == e.v) out.push_back({e.id});
    return out;
  }

  int block_count() const { return int(blocks().size()); }

  // Dimension of the bicycle space C ∩ C^perp over GF(2). Uses a fundamental
  // cycle basis (loops contribute singleton vectors); the bicycle dimension is
  // dim C minus the GF(2) rank of the Gram matrix of the basis.
  int bicycle_dimension() const {
    size_t m = edges_.size();
    if (m > 64) throw std::invalid_argument("bicycle_dimension limited to 64 edges");
    std::vector<uint64_t> basis;
    detail::UnionFind uf(n_);
    std::vector<int> tree_idx;
    std::vector<char> in_tree(m, 0);
    for (size_t i = 0; i < m; ++i) {
      const Edge& e = edges_[i];
      if (e.u != e.v && uf.unite(e.u, e.v)) {
        in_tree[i] = 1;
        tree_idx.push_back(int(i));
      }
    }
    // Fundamental cycle of each non-tree edge via tree paths.
    std::vector<std::vector<std::pair<int, int>>> tadj(static_cast<size_t>(n_));
    for (int ti : tree_idx) {
      tadj[size_t(edges_[size_t(ti)].u)].push_back({edges_[size_t(ti)].v, ti});
      tadj[size_t(edges_[size_t(ti)].v)].push_back({edges_[size_t(ti)].u, ti});
    }
    auto tree_path = [&](int s, int t) -> uint64_t {
      if (s == t) return 0;
      std::vector<int> par_edge(size_t(n_), -2), par(size_t(n_), -1);
      std::vector<int> q{s};
      par_edge[size_t(s)] = -1;
      for (size_t h = 0; h < q.size(); ++h) {
        int u = q[h];
        for (auto [w, ei] : tadj[size_t(u)])
          if (par_edge[size_t(w)] == -2) {
            par_edge[size_t(w)] = ei;
            par[size_t(w)] = u;
            q.push_back(w);
          }
      }
      uint64_t vec = 0;
      int cur = t;
      while (cur != s) {
        if (par_edge[size_t(cur)] < 0) return 0;  // different components
        vec ^= (uint64_t(1) << par_edge[size_t(cur)]);
        cur = par[size_t(cur)];
      }
      return vec;
    };
    for (size_t i = 0; i < m; ++i) {
      if (in_tree[i]) continue;
      const Edge& e = edges_[i];
      uint64_t vec = uint64_t(1) << i;
      if (e.u != e.v) vec ^= tree_path(e.u, e.v);
      basis.push_back(vec);
    }
    size_t d = basis.size();
    // Gram matrix over GF(2); kernel dimension = d - rank.
    std::vector<uint64_t> gram(d, 0);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        if (__builtin_popcountll(basis[i] & basis[j]) & 1) gram[i] |= uint64_t(1) << j;
    int rank = 0;
    for (size_t col = 0; col < d; ++col) {
      size_t piv = size_t(-1);
      for (size_t r = size_t(rank); r < d; ++r)
        if (gram[r] >> col & 1) {
          piv = r;
          break;
        }
      if (piv == size_t(-1)) continue;
      std::swap(gram[piv], gram[size_t(rank)]);
      for (size_t r = 0; r < d; ++r)
        if (r != size_t(rank) && (gram[r] >> col & 1)) gram[r] ^= gram[size_t(rank)];
      ++rank;
    }
    return int(d) - rank;
  }

  int cycle_space_dimension() const { return num_edges() - n_ + components(); }
  int rank_all() const { return n_ - components(); }

  std::vector<std::vector<int>> adjacency_lists() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
    for (const Edge& e : edges_) {
      if (e.u == e.v) continue;
      adj[size_t(e.u)].push_back(e.v);
      adj[size_t(e.v)].push_back(e.u);
    }
    return adj;
  }

  // Induced subgraph on the given vertices (fresh ids, order preserved).
  Multigraph induced(const std::vector<int>& verts) const {
    std::vector<int> map(size_t(n_), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
      check_vertex(verts[i]);
      map[size_t(verts[i])] = int(i);
    }
    Multigraph g(int(verts.size()));
    for (const Edge& e : edges_) {
      int a = map[size_t(e.u)], b = map[size_t(e.v)];
      if (a >= 0 && b >= 0) g.add_edge(a, b);
    }
    return g;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  }

  int n_ = 0;
  int next_id_ = 0;
  std::vector<Edge> edges_;
};

// ---- Generators ----

inline Multigraph empty_graph(int n) { return Multigraph(n); }

inline Multigraph complete_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Multigraph path_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Multigraph cycle_graph(int n) {
  if (n < 1) throw std::invalid_argument("cycle needs a vertex");
  Multigraph g(n);
  if (n == 1) {
    g.add_edge(0, 0);
    return g;
  }
  if (n == 2) {
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Multigraph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("part sizes must be positive");
    n += p;
  }
  Multigraph g(n);
  std::vector<int> part_of(static_cast<size_t>(n));
  int v = 0;
  for (size_t p = 0; p < parts.size(); ++p)
    for (int i = 0; i < parts[p]; ++i) part_of[size_t(v++)] = int(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[size_t(i)] != part_of[size_t(j)]) g.add_edge(i, j);
  return g;
}

// Outer vertices u_i = 0..n-1, inner v_i = n..2n-1; spokes u_i v_i, outer
// cycle u_i u_{i+1}, inner edges v_i v_{i+k}, indices mod n.
inline Multigraph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || k > (n - 1) / 2)
    throw std::invalid_argument("generalized Petersen needs n>=3, 1<=k<=(n-1)/2");
  Multigraph g(2 * n);
  for (int i = 0; i < n; ++i) g.add_edge(i, n + i);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) g.add_edge(n + i, n + (i + k) % n);
  return g;
}

inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  Multigraph g(a.num_vertices() + b.num_vertices());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  int off = a.num_vertices();
  for (const Edge& e : b.edges()) g.add_edge(e.u + off, e.v + off);
  return g;
}

inline Multigraph join(const Multigraph& a, const Multigraph& b) {
  Multigraph g = disjoint_union(a, b);
  int off = a.num_vertices();
  for (int i = 0; i < a.num_vertices(); ++i)
    for (int j = 0; j < b.num_vertices(); ++j) g.add_edge(i, off + j);
  return g;
}

inline Multigraph complement(const Multigraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("complement needs a simple graph");
  int n = g.num_vertices();
  std::vector<std::vector<char>> adj(size_t(n), std::vector<char>(size_t(n), 0));
  for (const Edge& e : g.edges()) adj[size_t(e.u)][size_t(e.v)] = adj[size_t(e.v)][size_t(e.u)] = 1;
  Multigraph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!adj[size_t(i)][size_t(j)]) h.add_edge(i, j);
  return h;
}

// Two vertices joined by k parallel edges.
inline Multigraph parallel_bundle(int k) {
  Multigraph g(2);
  for (int i = 0; i < k; ++i) g.add_edge(0, 1);
  return g;
}

// ---- Set partitions ----

struct SetPartition {
  std::vector<std::vector<int>> blocks;
  int size() const { return int(blocks.size()); }
};

// All partitions of {0..n-1} via restricted growth strings, Bell(n) of them.
inline void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n == 0) {
    fn(SetPartition{});
    return;
  }
  std::vector<int> rgs(size_t(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == n) {
      SetPartition p;
      p.blocks.assign(size_t(maxb) + 1, {});
      for (int v = 0; v < n; ++v) p.blocks[size_t(rgs[size_t(v)])].push_back(v);
      fn(p);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[size_t(i)] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  rec(1, 0);  // vertex 0 always starts block 0
}

inline std::vector<SetPartition> partitions_of(int n) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

// G(P): spanning subgraph keeping exactly the intra-block edges.
inline Multigraph induced_partition_graph(const Multigraph& g, const SetPartition& p) {
  std::vector<int> block_of(size_t(g.num_vertices()), -1);
  for (size_t b = 0; b < p.blocks.size(); ++b)
    for (int v : p.blocks[b]) {
      if (v < 0 || v >= g.num_vertices() || block_of[size_t(v)] != -1)
        throw std::invalid_argument("not a partition of the vertex set");
      block_of[size_t(v)] = int(b);
    }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (block_of[size_t(v)] < 0) throw std::invalid_argument("partition misses a vertex");
  Multigraph h(g.num_vertices());
  for (const Edge& e : g.edges())
    if (block_of[size_t(e.u)] == block_of[size_t(e.v)]) h.add_edge(e.u, e.v);
  return h;
}

}  // namespace polyforge
