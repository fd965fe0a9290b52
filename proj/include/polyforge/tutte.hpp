#pragma once

#include <polyforge/bipoly.hpp>
#include <polyforge/flowchrom.hpp>
#include <polyforge/iso.hpp>
#include <polyforge/matroid.hpp>
#include <polyforge/multigraph.hpp>
#include <polyforge/report.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace polyforge {

namespace detail {

struct TutteCache {
  std::unordered_map<std::string, BiPoly> memo;
  std::mutex mu;
};

inline TutteCache& tutte_cache() {
  static TutteCache c;
  return c;
}

}  // namespace detail

// Tutte polynomial by deletion-contraction with block factorization and a
// canonical-key memo shared across calls.
inline BiPoly tutte_dc(const Multigraph& g) {
  if (g.num_edges() == 0) return BiPoly::one();
  auto blks = g.blocks();
  if (blks.size() > 1) {
    BiPoly out = BiPoly::one();
    for (const auto& blk : blks) {
      std::vector<int> verts;
      std::vector<char> seen(size_t(g.num_vertices()), 0);
      for (int id : blk) {
        const Edge& e = g.edge(id);
        for (int w : {e.u, e.v})
          if (!seen[size_t(w)]) {
            seen[size_t(w)] = 1;
            verts.push_back(w);
          }
      }
      std::vector<int> idx(size_t(g.num_vertices()), -1);
      for (size_t i = 0; i < verts.size(); ++i) idx[size_t(verts[i])] = int(i);
      Multigraph b(int(verts.size()));
      for (int id : blk) {
        const Edge& e = g.edge(id);
        b.add_edge(idx[size_t(e.u)], idx[size_t(e.v)]);
      }
      out *= tutte_dc(b);
    }
    return out;
  }
  const std::vector<int>& blk = blks[0];
  if (blk.size() == 1) {
    const Edge& e = g.edge(blk[0]);
    return e.u == e.v ? BiPoly::y() : BiPoly::x();
  }
  // the canonical key is only exact up to 10 vertices; beyond that, recurse
  // without the cache
  bool cacheable = g.num_vertices() <= 10;
  std::string key;
  if (cacheable) {
    key = canonical_multigraph_key(g);
    std::lock_guard<std::mutex> lock(detail::tutte_cache().mu);
    auto it = detail::tutte_cache().memo.find(key);
    if (it != detail::tutte_cache().memo.end()) return it->second;
  }
  // a single 2-connected block with >= 2 edges: every edge is normal; pick
  // one from the largest parallel class to shrink minors fastest
  int best_id = -1, best_cnt = 0;
  for (const Edge& e : g.edges()) {
    int cnt = 0;
    for (const Edge& f : g.edges())
      if (std::min(f.u, f.v) == std::min(e.u, e.v) && std::max(f.u, f.v) == std::max(e.u, e.v))
        ++cnt;
    if (cnt > best_cnt) {
      best_cnt = cnt;
      best_id = e.id;
    }
  }
  BiPoly result =
      tutte_dc(g.delete_edge(best_id)) + tutte_dc(g.contract_edge_multi(best_id));
  if (cacheable) {
    std::lock_guard<std::mutex> lock(detail::tutte_cache().mu);
    detail::tutte_cache().memo.emplace(std::move(key), result);
  }
  return result;
}

// ---- spanning-tree activities ----

struct ActivityCount {
  std::map<std::pair<int, int>, BigInt> t;  // (internal, external) -> count
  BiPoly poly() const {
    BiPoly out;
    for (const auto& [k, c] : t) out.add_term(k.first, k.second, Rat(c, 1));
    return out;
  }
};

// Activity expansion over spanning trees with an injective edge ranking
// (edge-id -> rank). The polynomial is ranking-invariant and equals tutte_dc.
inline ActivityCount tutte_activities(const Multigraph& g, const std::map<int, int>& rank) {
  if (!g.is_connected()) throw std::invalid_argument("activities need a connected graph");
  int m = g.num_edges(), n = g.num_vertices();
  if (m > 20) throw std::invalid_argument("activity enumeration limited to 20 edges");
  {
    std::map<int, int> seen;
    for (const Edge& e : g.edges()) {
      auto it = rank.find(e.id);
      if (it == rank.end()) throw std::invalid_argument("ranking misses an edge");
      if (!seen.emplace(it->second, e.id).second)
        throw std::invalid_argument("ranking must be injective");
    }
  }
  ActivityCount out;
  std::vector<int> tree;
  std::function<void(int, detail::UnionFind&, int)> rec = [&](int i, detail::UnionFind& uf,
                                                              int joined) {
    if (joined == n - 1) {
      // score the tree
      std::vector<char> in_tree(size_t(m), 0);
      for (int t : tree) in_tree[size_t(t)] = 1;
      int internal = 0, external = 0;
      // internal: tree edge minimal across the cut T \ e
      for (int t : tree) {
        detail::UnionFind cut(n);
        for (int s : tree)
          if (s != t) cut.unite(g.edges()[size_t(s)].u, g.edges()[size_t(s)].v);
        const Edge& te = g.edges()[size_t(t)];
        int ra = cut.find(te.u), rb = cut.find(te.v);
        bool minimal = true;
        for (int j = 0; j < m; ++j) {
          const Edge& f = g.edges()[size_t(j)];
          int fa = cut.find(f.u), fb = cut.find(f.v);
          bool crosses = (fa == ra && fb == rb) || (fa == rb && fb == ra);
          if (crosses && fa != fb && rank.at(f.id) < rank.at(te.id)) minimal = false;
        }
        if (minimal) ++internal;
      }
      // external: non-tree edge minimal on its fundamental cycle (a loop's
      // cycle is itself, so loops are always active)
      for (int j = 0; j < m; ++j) {
        if (in_tree[size_t(j)]) continue;
        const Edge& f = g.edges()[size_t(j)];
        if (f.u == f.v) {
          ++external;
          continue;
        }
        // tree path between f.u and f.v
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
        for (int t : tree) {
          adj[size_t(g.edges()[size_t(t)].u)].push_back({g.edges()[size_t(t)].v, t});
          adj[size_t(g.edges()[size_t(t)].v)].push_back({g.edges()[size_t(t)].u, t});
        }
        std::vector<int> par(size_t(n), -2), par_edge(size_t(n), -1);
        std::vector<int> q{f.u};
        par[size_t(f.u)] = -1;
        for (size_t h = 0; h < q.size(); ++h)
          for (auto [w, ei] : adj[size_t(q[h])])
            if (par[size_t(w)] == -2) {
              par[size_t(w)] = q[h];
              par_edge[size_t(w)] = ei;
              q.push_back(w);
            }
        bool minimal = true;
        int cur = f.v;
        while (cur != f.u) {
          if (rank.at(g.edges()[size_t(par_edge[size_t(cur)])].id) < rank.at(f.id))
            minimal = false;
          cur = par[size_t(cur)];
        }
        if (minimal) ++external;
      }
      out.t[{internal, external}] += 1;
      return;
    }
    if (i == m) return;
    if (m - i < (n - 1) - joined) return;  // not enough edges left
    rec(i + 1, uf, joined);
    const Edge& e = g.edges()[size_t(i)];
    if (e.u != e.v) {
      detail::UnionFind uf2 = uf;
      if (uf2.unite(e.u, e.v)) {
        tree.push_back(i);
        rec(i + 1, uf2, joined + 1);
        tree.pop_back();
      }
    }
  };
  detail::UnionFind uf(n);
  rec(0, uf, 0);
  return out;
}

inline std::map<int, int> ranking_by_id(const Multigraph& g) {
  std::map<int, int> r;
  for (const Edge& e : g.edges()) r[e.id] = e.id;
  return r;
}

// ---- special-point dictionary ----

struct SpecialValues {
  BigInt spanning_trees;
  BigInt acyclic_orientations;
  BigInt totally_cyclic_orientations;
  BigInt forests;
  BigInt connected_spanning_subgraphs;
  BigInt two_pow_m;
};

namespace detail {

inline BigInt eval_integer(const BiPoly& t, const Rat& x, const Rat& y) {
  Rat v = t(x, y);
  if (den(v) != 1) throw std::logic_error("expected integer Tutte evaluation");
  return num(v);
}

}  // namespace detail

inline SpecialValues special_values(const Multigraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("special values need a connected graph");
  BiPoly t = tutte_dc(g);
  SpecialValues sv;
  sv.spanning_trees = detail::eval_integer(t, Rat(1), Rat(1));
  sv.acyclic_orientations = detail::eval_integer(t, Rat(2), Rat(0));
  sv.totally_cyclic_orientations = detail::eval_integer(t, Rat(0), Rat(2));
  sv.forests = detail::eval_integer(t, Rat(2), Rat(1));
  sv.connected_spanning_subgraphs = detail::eval_integer(t, Rat(1), Rat(2));
  sv.two_pow_m = int_pow(BigInt(2), unsigned(g.num_edges()));
  return sv;
}

// Direct enumeration cross-check for |E| <= 12.
inline SpecialValues special_values_enum(const Multigraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("special values need a connected graph");
  int m = g.num_edges(), n = g.num_vertices();
  if (m > 12) throw std::invalid_argument("enumeration oracle limited to 12 edges");
  SpecialValues sv;
  sv.two_pow_m = int_pow(BigInt(2), unsigned(m));
  sv.spanning_trees = 0;
  sv.forests = 0;
  sv.connected_spanning_subgraphs = 0;
  for (uint32_t mask = 0;; ++mask) {
    std::vector<char> keep(size_t(m), 0);
    int count = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        keep[size_t(i)] = 1;
        ++count;
      }
    int c = g.components(keep);
    bool acyclic_subset = (c == n - count);
    if (acyclic_subset) sv.forests += 1;
    if (c == 1) {
      sv.connected_spanning_subgraphs += 1;
      if (acyclic_subset) sv.spanning_trees += 1;
    }
    if (mask == (m == 0 ? 0u : (uint32_t(1) << m) - 1)) break;
  }
  sv.acyclic_orientations = acyclic_orientation_count_enum(g);
  // totally cyclic: each arc lies on a directed cycle
  sv.totally_cyclic_orientations = 0;
  int nonloop = 0;
  std::vector<int> nonloop_idx;
  for (int i = 0; i < m; ++i)
    if (g.edges()[size_t(i)].u != g.edges()[size_t(i)].v) {
      ++nonloop;
      nonloop_idx.push_back(i);
    }
  for (uint32_t mask = 0; mask < (uint32_t(1) << nonloop); ++mask) {
    std::vector<std::vector<char>> reach(size_t(n), std::vector<char>(size_t(n), 0));
    std::vector<std::pair<int, int>> arcs;
    for (int k = 0; k < nonloop; ++k) {
      const Edge& e = g.edges()[size_t(nonloop_idx[size_t(k)])];
      int a = e.u, b = e.v;
      if (mask >> k & 1) std::swap(a, b);
      arcs.push_back({a, b});
      reach[size_t(a)][size_t(b)] = 1;
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (reach[size_t(i)][size_t(k)])
          for (int j = 0; j < n; ++j)
            if (reach[size_t(k)][size_t(j)]) reach[size_t(i)][size_t(j)] = 1;
    bool ok = true;
    for (auto [a, b] : arcs)
      if (!reach[size_t(b)][size_t(a)]) {
        ok = false;
        break;
      }
    if (ok) sv.totally_cyclic_orientations += 1;
  }
  return sv;
}

// ---- identity checks ----

// Convolution over vertex partitions with connected bridgeless blocks
// (graph form) and over coloop-free flats of the cycle matroid (matroid form).
inline IdentityReport convolution_check(const Multigraph& g, const std::string& instance) {
  int n = g.num_vertices();
  if (n > 8) throw std::invalid_argument("convolution check limited to 8 vertices");
  BiPoly t = tutte_dc(g);
  BiPoly sum;
  for_each_partition(n, [&](const SetPartition& p) {
    // every block must induce a connected bridgeless subgraph
    for (const auto& block : p.blocks) {
      Multigraph sub = g.induced(block);
      if (!sub.is_connected()) return;
      for (const Edge& e : sub.edges())
        if (sub.classify_edge(e.id) == EdgeKind::Bridge) return;
    }
    // G|P: intra-block spanning subgraph; G/P: one vertex per block
    Multigraph gp = induced_partition_graph(g, p);
    std::vector<int> block_of(size_t(n), -1);
    for (size_t b = 0; b < p.blocks.size(); ++b)
      for (int v : p.blocks[b]) block_of[size_t(v)] = int(b);
    Multigraph quotient(int(p.blocks.size()));
    for (const Edge& e : g.edges())
      if (block_of[size_t(e.u)] != block_of[size_t(e.v)])
        quotient.add_edge(block_of[size_t(e.u)], block_of[size_t(e.v)]);
    Poly tx = tutte_dc(quotient).eval_y(Rat(0));
    Poly ty = tutte_dc(gp).eval_x(Rat(0));
    sum += BiPoly::from_x(tx) * BiPoly::from_y(ty);
  });
  if (sum != t)
    return report_fail("tutte-convolution-partitions", instance, t.str(), sum.str());
  // matroid-flat form on the cycle matroid
  if (g.num_edges() <= 16) {
    Matroid mg = Matroid::cycle_matroid(g);
    BiPoly tm = tutte_subset_matroid(mg);
    BiPoly msum;
    for (uint32_t f : flats(mg)) {
      Matroid rest = Matroid::restriction(mg, f);
      bool coloop_free = true;
      for (int e = 0; e < rest.ground_size() && coloop_free; ++e)
        if (rest.is_coloop(e)) coloop_free = false;
      if (!coloop_free) continue;
      Poly tx = tutte_subset_matroid(Matroid::contraction(mg, f)).eval_y(Rat(0));
      Poly ty = tutte_subset_matroid(rest).eval_x(Rat(0));
      msum += BiPoly::from_x(tx) * BiPoly::from_y(ty);
    }
    if (msum != tm)
      return report_fail("tutte-convolution-flats", instance, tm.str(), msum.str());
  }
  return report_pass("tutte-convolution", instance);
}

// T_M((v+1)/v, v+1) = (v+1)^{|E|} / v^{r}.
inline IdentityReport rational_identity_check(const Multigraph& g, const Rat& v,
                                              const std::string& instance) {
  if (v == 0 || v == -1) throw std::invalid_argument("v must avoid 0 and -1");
  BiPoly t = tutte_dc(g);
  Rat lhs = t((v + 1) / v, v + 1);
  int r = g.num_vertices() - g.components();
  Rat rhs = rat_pow(v + 1, g.num_edges()) / rat_pow(v, r);
  if (lhs == rhs) return report_pass("tutte-rational-point", instance);
  return report_fail("tutte-rational-point", instance, to_string(lhs), to_string(rhs));
}

inline IdentityReport rational_identity_check_matroid(const Matroid& m, const Rat& v,
                                                      const std::string& instance) {
  if (v == 0 || v == -1) throw std::invalid_argument("v must avoid 0 and -1");
  Rat lhs = tutte_subset_matroid(m)((v + 1) / v, v + 1);
  Rat rhs = rat_pow(v + 1, m.ground_size()) / rat_pow(v, m.rank_total());
  if (lhs == rhs) return report_pass("tutte-rational-point", instance);
  return report_fail("tutte-rational-point", instance, to_string(lhs), to_string(rhs));
}

// Stanley: k T_G(k+1, 0) = (-1)^{|V|} chi(G, -k) for connected G; for tiny
// graphs the pair-enumeration count is checked as well.
inline IdentityReport stanley_negative_check(const Multigraph& g, int k,
                                             const std::string& instance) {
  if (!g.is_connected()) throw std::invalid_argument("stanley check needs a connected graph");
  if (k < 1 || k > 3) throw std::invalid_argument("k in {1,2,3}");
  BiPoly t = tutte_dc(g);
  Rat lhs = Rat(k) * t(Rat(k + 1), Rat(0));
  Rat chi = chromatic_poly(g)(Rat(-k));
  Rat rhs = (g.num_vertices() % 2) ? -chi : chi;
  if (lhs != rhs)
    return report_fail("stanley-negative", instance, to_string(lhs), to_string(rhs));
  if (g.num_vertices() <= 5 && g.num_edges() <= 10) {
    BigInt pairs = chi_tilde_enum(g, k);
    if (Rat(pairs, 1) != rhs)
      return report_fail("stanley-negative-enum", instance, pairs.str(), to_string(rhs));
  }
  return report_pass("stanley-negative", instance);
}

// Read-Rosenstiehl: T_G(-1,-1) = (-1)^{|E|} (-2)^{dim B}.
inline IdentityReport read_rosenstiehl_check(const Multigraph& g, const std::string& instance) {
  BiPoly t = tutte_dc(g);
  Rat lhs = t(Rat(-1), Rat(-1));
  int dim = g.bicycle_dimension();
  Rat rhs = rat_pow(Rat(-2), dim);
  if (g.num_edges() % 2) rhs = -rhs;
  if (lhs == rhs) return report_pass("read-rosenstiehl", instance);
  return report_fail("read-rosenstiehl", instance, to_string(lhs), to_string(rhs));
}

inline bool t_equivalent(const Multigraph& a, const Multigraph& b) {
  return tutte_dc(a) == tutte_dc(b);
}

// Merino-Welsh probes: records whether max{T(2,0),T(0,2)} >= T(1,1) and the
// multiplicative strengthening hold. A counterexample fails the report.
inline IdentityReport merino_welsh_probe(const Multigraph& g, const std::string& instance) {
  if (g.has_loop() || !g.is_connected() || g.block_count() != 1 || g.num_edges() < 2)
    throw std::invalid_argument("merino-welsh probe needs a 2-connected loopless graph");
  BiPoly t = tutte_dc(g);
  Rat a = t(Rat(2), Rat(0)), b = t(Rat(0), Rat(2)), c = t(Rat(1), Rat(1));
  Rat mx = a > b ? a : b;
  if (mx < c)
    return report_fail("merino-welsh-max", instance, to_string(mx), ">= " + to_string(c));
  if (a * b < c * c)
    return report_fail("merino-welsh-product", instance, to_string(a * b),
                       ">= " + to_string(c * c));
  return report_pass("merino-welsh", instance);
}

// T_{K_{n+2}}(1,-1) = T_{K_n}(2,-1).
inline IdentityReport merino_identity_check(int n, const std::string& instance) {
  if (n < 1 || n > 4) throw std::invalid_argument("merino identity checked for n <= 4");
  Rat lhs = tutte_dc(complete_graph(n + 2))(Rat(1), Rat(-1));
  Rat rhs = tutte_dc(complete_graph(n))(Rat(2), Rat(-1));
  if (lhs == rhs) return report_pass("merino-identity", instance);
  return report_fail("merino-identity", instance, to_string(lhs), to_string(rhs));
}

// Coefficient properties of the activity counts t_{ij}: reconstruction always,
// items (i)-(v) for loopless bridgeless graphs.
inline IdentityReport coefficient_property_check(const Multigraph& g,
                                                 const std::string& instance) {
  if (!g.is_connected()) throw std::invalid_argument("needs a connected graph");
  ActivityCount ac = tutte_activities(g, ranking_by_id(g));
  BiPoly t = tutte_dc(g);
  if (ac.poly() != t)
    return report_fail("activity-reconstruction", instance, ac.poly().str(), t.str());
  bool has_bridge = false;
  for (const Edge& e : g.edges())
    if (g.classify_edge(e.id) == EdgeKind::Bridge) has_bridge = true;
  if (g.has_loop() || has_bridge)
    return report_pass("tutte-coefficients", instance, "loop/coloop present; items vacuous");
  int m = g.num_edges();
  int r = g.num_vertices() - g.components();
  auto tt = [&](int i, int j) -> BigInt {
    auto it = ac.t.find({i, j});
    return it == ac.t.end() ? BigInt(0) : it->second;
  };
  if (m >= 2 && tt(1, 0) != tt(0, 1))
    return report_fail("tutte-coefficients-i", instance, tt(1, 0).str(), tt(0, 1).str());
  for (const auto& [k, c] : ac.t)
    if (k.first > r || k.second > m - r)
      return report_fail("tutte-coefficients-ii", instance,
                         "t at (" + std::to_string(k.first) + "," + std::to_string(k.second) +
                             ") nonzero",
                         "zero beyond (r, m-r)");
  if (tt(r, 0) != 1 || tt(0, m - r) != 1)
    return report_fail("tutte-coefficients-iii", instance, tt(r, 0).str() + "," +
                           tt(0, m - r).str(), "1,1");
  for (int j = 1; j <= m - r; ++j)
    if (tt(r, j) != 0)
      return report_fail("tutte-coefficients-iv", instance, "t(r," + std::to_string(j) + ")",
                         "0");
  for (int i = 1; i <= r; ++i)
    if (tt(i, m - r) != 0)
      return report_fail("tutte-coefficients-iv", instance,
                         "t(" + std::to_string(i) + ",m-r)", "0");
  for (int k = 0; k < m; ++k) {
    BigInt sum = 0;
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k - i; ++j) {
        BigInt term = binomial(unsigned(k - i), unsigned(j)) * tt(i, j);
        sum += (j & 1) ? -term : term;
      }
    if (sum != 0)
      return report_fail("tutte-coefficients-v", instance, "k=" + std::to_string(k),
                         sum.str());
  }
  return report_pass("tutte-coefficients", instance);
}

}  // namespace polyforge
