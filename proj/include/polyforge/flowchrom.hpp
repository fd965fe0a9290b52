#pragma once

#include <polyforge/iso.hpp>
#include <polyforge/matroid.hpp>
#include <polyforge/multigraph.hpp>
#include <polyforge/poly.hpp>
#include <polyforge/potts.hpp>
#include <polyforge/report.hpp>
#include <polyforge/sturm.hpp>

#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace polyforge {

namespace detail {

struct ChromaticCache {
  std::unordered_map<uint64_t, Poly> memo;  // key: canonical mask ^ (n << 56)
  std::mutex mu;
};

inline ChromaticCache& chromatic_cache() {
  static ChromaticCache c;
  return c;
}

inline uint64_t packed_key(const PackedGraph& p) {
  return p.mask | (uint64_t(p.n) << 56);
}

inline Poly chromatic_connected(const Multigraph& g);

}  // namespace detail

// Chromatic polynomial by deletion and simple contraction, memoized on
// canonical forms. Loops force the zero polynomial; parallel edges collapse.
inline Poly chromatic_poly(const Multigraph& g) {
  if (g.has_loop()) return Poly::zero();
  Multigraph s = g.simplify();
  // components multiply
  detail::UnionFind uf(s.num_vertices());
  for (const Edge& e : s.edges()) uf.unite(e.u, e.v);
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < s.num_vertices(); ++v) comps[uf.find(v)].push_back(v);
  Poly out = Poly::one();
  for (const auto& [root, verts] : comps)
    out *= detail::chromatic_connected(s.induced(verts));
  if (s.num_vertices() == 0) return Poly::one();
  return out;
}

namespace detail {

inline Poly chromatic_connected(const Multigraph& g) {
  int n = g.num_vertices();
  if (n == 1) return Poly::x();
  if (n > 12) throw std::invalid_argument("chromatic recursion limited to 12 vertices");
  PackedGraph canon = canonical_form(g);
  uint64_t key = packed_key(canon);
  {
    std::lock_guard<std::mutex> lock(chromatic_cache().mu);
    auto it = chromatic_cache().memo.find(key);
    if (it != chromatic_cache().memo.end()) return it->second;
  }
  Poly result;
  if (g.num_edges() == int(uint64_t(n) * (n - 1) / 2)) {
    result = falling_factorial_poly(unsigned(n));  // complete graph
  } else {
    // pick the edge whose contraction collapses the most parallel pairs,
    // i.e. whose endpoints share the most neighbors
    std::vector<uint16_t> adj(size_t(n), 0);
    for (const Edge& e : g.edges()) {
      adj[size_t(e.u)] |= uint16_t(1) << e.v;
      adj[size_t(e.v)] |= uint16_t(1) << e.u;
    }
    int best = -1, common = -1;
    for (const Edge& e : g.edges()) {
      int c = __builtin_popcount(adj[size_t(e.u)] & adj[size_t(e.v)]);
      if (c > common) {
        common = c;
        best = e.id;
      }
    }
    result = chromatic_poly(g.delete_edge(best)) - chromatic_poly(g.contract_edge_simple(best));
  }
  std::lock_guard<std::mutex> lock(chromatic_cache().mu);
  chromatic_cache().memo.emplace(key, result);
  return result;
}

}  // namespace detail

// Subset-expansion oracle chi(G,x) = sum_A (-1)^|A| x^{c(A)}.
inline Poly chromatic_subset(const Multigraph& g) {
  int m = g.num_edges();
  if (m > 20) throw std::invalid_argument("chromatic subset expansion limited to 20 edges");
  int n = g.num_vertices();
  std::vector<BigInt> acc(size_t(n) + 1, BigInt(0));
  const auto& es = g.edges();
  std::function<void(size_t, detail::UnionFind&, int, int)> rec =
      [&](size_t i, detail::UnionFind& uf, int comps, int parity) {
        if (i == es.size()) {
          acc[size_t(comps)] += parity;
          return;
        }
        rec(i + 1, uf, comps, parity);
        detail::UnionFind uf2 = uf;
        int c2 = comps - (uf2.unite(es[i].u, es[i].v) ? 1 : 0);
        rec(i + 1, uf2, c2, -parity);
      };
  detail::UnionFind uf(n);
  rec(0, uf, n, 1);
  Poly out;
  for (int i = 0; i <= n; ++i) out += Poly::monomial(i, Rat(acc[size_t(i)], 1));
  return out;
}

// Smallest positive integer k with chi(G,k) > 0.
inline int chromatic_number(const Multigraph& g) {
  if (g.has_loop()) throw std::invalid_argument("chromatic number undefined with a loop");
  Poly chi = chromatic_poly(g);
  for (int k = 0; k <= g.num_vertices(); ++k)
    if (chi(Rat(k)) > 0) return k;
  throw std::logic_error("chromatic polynomial vanished on 0..n");
}

// ---- flow polynomial ----

namespace detail {

struct FlowCache {
  std::unordered_map<std::string, Poly> memo;
  std::mutex mu;
};

inline FlowCache& flow_cache() {
  static FlowCache c;
  return c;
}

inline thread_local const std::chrono::steady_clock::time_point* flow_deadline = nullptr;

}  // namespace detail

// Scope guard installing a deadline for flow_poly on the current thread.
class FlowDeadlineGuard {
 public:
  explicit FlowDeadlineGuard(double seconds)
      : deadline_(std::chrono::steady_clock::now() +
                  std::chrono::microseconds(int64_t(seconds * 1e6))) {
    detail::flow_deadline = &deadline_;
  }
  ~FlowDeadlineGuard() { detail::flow_deadline = nullptr; }
  FlowDeadlineGuard(const FlowDeadlineGuard&) = delete;

 private:
  std::chrono::steady_clock::time_point deadline_;
};

inline Poly flow_poly(const Multigraph& g) {
  if (detail::flow_deadline && std::chrono::steady_clock::now() > *detail::flow_deadline)
    throw TimeoutError("flow polynomial budget exhausted");
  if (g.num_edges() == 0) return Poly::one();
  // factor over blocks first (covers components and cut vertices)
  auto blks = g.blocks();
  if (blks.size() > 1) {
    Poly out = Poly::one();
    for (const auto& blk : blks) {
      std::vector<int> verts;
      std::vector<char> seen(size_t(g.num_vertices()), 0);
      for (int id : blk) {
        const Edge& e = g.edge(id);
        if (!seen[size_t(e.u)]) {
          seen[size_t(e.u)] = 1;
          verts.push_back(e.u);
        }
        if (!seen[size_t(e.v)]) {
          seen[size_t(e.v)] = 1;
          verts.push_back(e.v);
        }
      }
      std::vector<int> idx(size_t(g.num_vertices()), -1);
      for (size_t i = 0; i < verts.size(); ++i) idx[size_t(verts[i])] = int(i);
      Multigraph b(int(verts.size()));
      for (int id : blk) {
        const Edge& e = g.edge(id);
        b.add_edge(idx[size_t(e.u)], idx[size_t(e.v)]);
      }
      out *= flow_poly(b);
      if (out.is_zero()) return out;
    }
    return out;
  }
  // single block
  const std::vector<int>& blk = blks[0];
  if (blk.size() == 1) {
    const Edge& e = g.edge(blk[0]);
    if (e.u == e.v) return Poly::x() - Poly(1);  // a lone loop
    return Poly::zero();                         // a bridge
  }
  // the canonical key is only a complete invariant up to 10 vertices; larger
  // graphs are computed without the cache
  bool cacheable = g.num_vertices() <= 10;
  std::string key;
  if (cacheable) {
    key = canonical_multigraph_key(g);
    std::lock_guard<std::mutex> lock(detail::flow_cache().mu);
    auto it = detail::flow_cache().memo.find(key);
    if (it != detail::flow_cache().memo.end()) return it->second;
  }
  Poly result;
  // loops factor out (x-1); a 2-connected block >1 edge has none, but minors do
  bool done = false;
  for (const Edge& e : g.edges())
    if (e.u == e.v) {
      result = (Poly::x() - Poly(1)) * flow_poly(g.delete_edge(e.id));
      done = true;
      break;
    }
  if (!done) {
    // suppress a degree-2 vertex: F(G) = F((G-w).uv)
    for (int w = 0; w < g.num_vertices() && !done; ++w) {
      if (g.degree(w) != 2) continue;
      std::vector<const Edge*> inc;
      for (const Edge& e : g.edges())
        if (e.u == w || e.v == w) inc.push_back(&e);
      if (inc.size() != 2) continue;
      int u = inc[0]->u == w ? inc[0]->v : inc[0]->u;
      int v = inc[1]->u == w ? inc[1]->v : inc[1]->u;
      Multigraph h(g.num_vertices());
      for (const Edge& e : g.edges())
        if (e.id != inc[0]->id && e.id != inc[1]->id) h.add_edge(e.u, e.v);
      h.add_edge(u, v);  // u == v yields a loop, as suppression demands
      result = flow_poly(h);
      done = true;
    }
  }
  if (!done) {
    const Edge& e = g.edges()[0];
    result = flow_poly(g.contract_edge_multi(e.id)) - flow_poly(g.delete_edge(e.id));
  }
  if (cacheable) {
    std::lock_guard<std::mutex> lock(detail::flow_cache().mu);
    detail::flow_cache().memo.emplace(std::move(key), result);
  }
  return result;
}

// F(G,q) at a numeric point via the boundary-partition sweep and the uniform
// substitution F(G,q) = (-1)^{|E|} q^{-|V|} Z_G(q, -q).
inline Rat flow_value_sweep(const Multigraph& g, const Rat& q,
                            const std::chrono::steady_clock::time_point* deadline = nullptr) {
  if (q == 0) throw std::invalid_argument("q must be nonzero");
  Rat z = potts_value_sweep(g, q, -q, {}, deadline);
  Rat v = z / rat_pow(q, g.num_vertices());
  if (g.num_edges() % 2) v = -v;
  return v;
}

// The whole flow polynomial from deg F + 1 integer evaluations of the sweep
// (all points share one traversal), Lagrange interpolation, and extra
// verification points. Reaches graphs whose deletion-contraction tree is out
// of range as long as the boundary stays narrow.
inline Poly flow_poly_sweep(const Multigraph& g,
                            const std::chrono::steady_clock::time_point* deadline = nullptr) {
  int degree_bound = g.num_edges() - g.num_vertices() + g.components();
  if (degree_bound < 0) return Poly::zero();
  int points = degree_bound + 1;
  int extra = 3;
  std::vector<std::pair<BigInt, BigInt>> pts;
  for (int k = 1; k <= points + extra; ++k) pts.push_back({BigInt(k), BigInt(-k)});
  std::vector<BigInt> zs = potts_sweep_multi<BigInt>(g, pts, {}, deadline);
  std::vector<Rat> values;
  for (int k = 1; k <= points + extra; ++k) {
    Rat v = Rat(zs[size_t(k - 1)], int_pow(BigInt(k), unsigned(g.num_vertices())));
    if (g.num_edges() % 2) v = -v;
    values.push_back(v);
  }
  // interpolate F(x+1) through the first deg+1 points, then shift back
  Poly shifted;
  for (int i = 0; i < points; ++i) {
    Poly li = Poly::one();
    Rat denom = 1;
    for (int j = 0; j < points; ++j) {
      if (j == i) continue;
      li *= (Poly::x() - Poly(Rat(j)));
      denom *= Rat(i - j);
    }
    shifted += li * (values[size_t(i)] / denom);
  }
  Poly f = shifted.compose(Poly::x() - Poly(1));
  for (int k = points + 1; k <= points + extra; ++k)
    if (f(Rat(k)) != values[size_t(k - 1)])
      throw std::logic_error("flow interpolation failed verification");
  return f;
}

// Subset-expansion route F = sum_A (-1)^{|E|-|A|} x^{|A|-|V|+c(A)}.
inline Poly subset_flow_expansion(const Multigraph& g) {
  int m = g.num_edges();
  if (m > 20) throw std::invalid_argument("flow subset expansion limited to 20 edges");
  int n = g.num_vertices();
  std::vector<BigInt> acc(size_t(m) + 1, BigInt(0));
  const auto& es = g.edges();
  std::function<void(size_t, detail::UnionFind&, int, int)> rec =
      [&](size_t i, detail::UnionFind& uf, int comps, int count) {
        if (i == es.size()) {
          int exp = count - n + comps;
          int parity = (m - count) & 1;
          acc[size_t(exp)] += parity ? -1 : 1;
          return;
        }
        rec(i + 1, uf, comps, count);
        detail::UnionFind uf2 = uf;
        int c2 = comps - (uf2.unite(es[i].u, es[i].v) ? 1 : 0);
        rec(i + 1, uf2, c2, count + 1);
      };
  detail::UnionFind uf(n);
  rec(0, uf, n, 0);
  Poly out;
  for (int i = 0; i <= m; ++i) out += Poly::monomial(i, Rat(acc[size_t(i)], 1));
  return out;
}

// Coefficients b_i with F = sum_i (-1)^i b_i x^{d-i}, d = deg F.
inline std::vector<Rat> flow_coefficients_alternating(const Poly& f) {
  std::vector<Rat> b;
  int d = f.degree();
  for (int i = 0; i <= d; ++i) {
    Rat c = f.coeff(d - i);
    b.push_back((i & 1) ? -c : c);
  }
  return b;
}

// Number of 3-edge-cuts (3-subsets whose deletion raises the component count).
inline int count_three_edge_cuts(const Multigraph& g) {
  int m = g.num_edges();
  int base = g.components();
  int count = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        std::vector<char> keep(size_t(m), 1);
        keep[size_t(a)] = keep[size_t(b)] = keep[size_t(c)] = 0;
        if (g.components(keep) > base) ++count;
      }
  return count;
}

// ---- enumeration oracles ----

// Number of nowhere-zero Z_q flows: edges oriented low -> high vertex, all
// maps E -> {1..q-1} enumerated, conservation checked at every vertex.
// `flip` reverses the orientation of chosen edges (the count is invariant).
inline BigInt flow_count_enum(const Multigraph& g, int q, const std::vector<char>& flip = {}) {
  if (q < 2) throw std::invalid_argument("q >= 2 required");
  int m = g.num_edges();
  if (m > 14) throw std::invalid_argument("flow enumeration limited to 14 edges");
  int n = g.num_vertices();
  // last edge index touching each vertex, for early conservation checks
  std::vector<int> last(size_t(n), -1);
  for (int i = 0; i < m; ++i) {
    last[size_t(g.edges()[size_t(i)].u)] = i;
    last[size_t(g.edges()[size_t(i)].v)] = i;
  }
  std::vector<int> balance(size_t(n), 0);
  BigInt count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      ++count;
      return;
    }
    const Edge& e = g.edges()[size_t(i)];
    bool flipped = !flip.empty() && flip[size_t(i)];
    int tail = e.u <= e.v ? e.u : e.v;
    int head = e.u <= e.v ? e.v : e.u;
    if (flipped) std::swap(tail, head);
    for (int val = 1; val < q; ++val) {
      if (e.u != e.v) {
        balance[size_t(tail)] = (balance[size_t(tail)] + val) % q;
        balance[size_t(head)] = (balance[size_t(head)] + q - val) % q;
      }
      bool ok = true;
      if (last[size_t(e.u)] == i && balance[size_t(e.u)] != 0) ok = false;
      if (ok && last[size_t(e.v)] == i && balance[size_t(e.v)] != 0) ok = false;
      if (ok) rec(i + 1);
      if (e.u != e.v) {
        balance[size_t(tail)] = (balance[size_t(tail)] + q - val) % q;
        balance[size_t(head)] = (balance[size_t(head)] + val) % q;
      }
    }
  };
  // vertices with no incident edges impose no condition
  rec(0);
  return count;
}

// Acyclic orientations by direct enumeration over non-loop edges.
inline BigInt acyclic_orientation_count_enum(const Multigraph& g) {
  if (g.has_loop()) return 0;
  int m = g.num_edges();
  if (m > 16) throw std::invalid_argument("orientation enumeration limited to 16 edges");
  int n = g.num_vertices();
  BigInt count = 0;
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    // arc i directed u->v unless bit set
    std::vector<int> indeg(size_t(n), 0);
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int i = 0; i < m; ++i) {
      const Edge& e = g.edges()[size_t(i)];
      int a = e.u, b = e.v;
      if (mask >> i & 1) std::swap(a, b);
      adj[size_t(a)].push_back(b);
      ++indeg[size_t(b)];
    }
    std::vector<int> q;
    for (int v = 0; v < n; ++v)
      if (indeg[size_t(v)] == 0) q.push_back(v);
    size_t head = 0;
    int seen = 0;
    while (head < q.size()) {
      int u = q[head++];
      ++seen;
      for (int w : adj[size_t(u)])
        if (--indeg[size_t(w)] == 0) q.push_back(w);
    }
    if (seen == n) ++count;
  }
  return count;
}

// (-1)^p chi(G,-1), the closed-form acyclic orientation count.
inline BigInt acyclic_orientation_count(const Multigraph& g) {
  Poly chi = chromatic_poly(g);
  Rat v = chi(Rat(-1));
  if (g.num_vertices() % 2) v = -v;
  if (den(v) != 1) throw std::logic_error("non-integer orientation count");
  return num(v);
}

// Pairs (theta, acyclic O) with theta(u) <= theta(v) on every arc; must equal
// (-1)^p chi(G,-k).
inline BigInt chi_tilde_enum(const Multigraph& g, int k) {
  int n = g.num_vertices();
  if (n > 5) throw std::invalid_argument("chi-tilde enumeration limited to 5 vertices");
  if (g.has_loop()) return 0;
  int m = g.num_edges();
  BigInt total = 0;
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    std::vector<int> indeg(size_t(n), 0);
    for (int i = 0; i < m; ++i) {
      const Edge& e = g.edges()[size_t(i)];
      int a = e.u, b = e.v;
      if (mask >> i & 1) std::swap(a, b);
      arcs.push_back({a, b});
      adj[size_t(a)].push_back(b);
      ++indeg[size_t(b)];
    }
    std::vector<int> q;
    for (int v = 0; v < n; ++v)
      if (indeg[size_t(v)] == 0) q.push_back(v);
    size_t head = 0;
    int seen = 0;
    while (head < q.size()) {
      int u = q[head++];
      ++seen;
      for (int w : adj[size_t(u)])
        if (--indeg[size_t(w)] == 0) q.push_back(w);
    }
    if (seen != n) continue;
    // count weakly order-preserving maps into {1..k}
    std::vector<int> theta(size_t(n), 1);
    std::function<void(int)> maps = [&](int v) {
      if (v == n) {
        for (auto [a, b] : arcs)
          if (theta[size_t(a)] > theta[size_t(b)]) return;
        ++total;
        return;
      }
      for (int c = 1; c <= k; ++c) {
        theta[size_t(v)] = c;
        maps(v + 1);
      }
    };
    maps(0);
  }
  return total;
}

// ---- identity checks ----

// Tutte's bivariate identity chi(G,x+y) = sum_S chi(G[S],x) chi(G-S,y).
inline IdentityReport tutte_bivariate_chromatic_check(const Multigraph& g,
                                                      const std::string& instance) {
  int n = g.num_vertices();
  if (n > 10) throw std::invalid_argument("bivariate chromatic check limited to 10 vertices");
  BiPoly lhs = compose_biv(chromatic_poly(g), BiPoly::x() + BiPoly::y());
  BiPoly rhs;
  for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
    std::vector<int> inside, outside;
    for (int v = 0; v < n; ++v)
      (s >> v & 1 ? inside : outside).push_back(v);
    rhs += BiPoly::from_x(chromatic_poly(g.induced(inside))) *
           BiPoly::from_y(chromatic_poly(g.induced(outside)));
  }
  if (lhs == rhs) return report_pass("chromatic-bivariate", instance);
  return report_fail("chromatic-bivariate", instance, lhs.str(), rhs.str());
}

// Wakelin: for bridgeless connected G the flow polynomial has a zero of
// multiplicity b(G) at x = 1.
inline IdentityReport wakelin_multiplicity_check(const Multigraph& g,
                                                 const std::string& instance) {
  if (!g.is_connected()) throw std::invalid_argument("wakelin check needs a connected graph");
  for (const Edge& e : g.edges())
    if (g.classify_edge(e.id) == EdgeKind::Bridge)
      throw std::invalid_argument("wakelin check needs a bridgeless graph");
  Poly f = flow_poly(g);
  if (g.num_edges() == 0)
    return report_pass("wakelin-multiplicity", instance, "edgeless, vacuous");
  int mult = root_multiplicity_at(f, Rat(1));
  int b = g.block_count();
  if (mult == b) return report_pass("wakelin-multiplicity", instance);
  return report_fail("wakelin-multiplicity", instance, std::to_string(mult),
                     std::to_string(b));
}

// F(G,x) = C(M*_G, x) and chi(G,x) = x^c C(M_G, x): the matroid bridges that
// replace plane duality.
inline IdentityReport duality_checks(const Multigraph& g, const std::string& instance) {
  if (g.num_edges() > 18) throw std::invalid_argument("duality check limited to 18 edges");
  Poly f = flow_poly(g);
  Poly cdual = char_poly_subset(Matroid::cocycle_matroid(g));
  if (f != cdual)
    return report_fail("flow-cocycle-char", instance, f.str(), cdual.str());
  Poly chi = chromatic_poly(g);
  Poly cm = char_poly_subset(Matroid::cycle_matroid(g));
  Poly lifted = Poly::monomial(g.components(), Rat(1)) * cm;
  if (chi != lifted)
    return report_fail("chromatic-cycle-char", instance, chi.str(), lifted.str());
  return report_pass("matroid-duality", instance);
}

// ---- Jackson factorizations ----

// Vertex-plus-edge split: E(H1) and E(H2) partition E(G\e), meeting only at
// v; G_i = H_i + v u_i; then F(G)(x-1) = F(G_1) F(G_2).
inline IdentityReport jackson_vertex_split_check(const Multigraph& g, int v, int e_id,
                                                 const std::vector<int>& h1_edge_ids,
                                                 const std::string& instance) {
  const Edge& e = g.edge(e_id);
  std::vector<char> in_h1(size_t(g.num_edges()), 0);
  std::vector<char> used(size_t(g.num_edges()), 0);
  std::vector<char> v_in_h1(size_t(g.num_vertices()), 0), v_in_h2(size_t(g.num_vertices()), 0);
  for (int id : h1_edge_ids) {
    bool found = false;
    for (size_t i = 0; i < g.edges().size(); ++i)
      if (g.edges()[i].id == id) {
        in_h1[i] = 1;
        found = true;
      }
    if (!found || id == e_id) throw std::invalid_argument("H1 must pick edges of G minus e");
  }
  for (size_t i = 0; i < g.edges().size(); ++i) {
    if (g.edges()[i].id == e_id) continue;
    auto& side = in_h1[i] ? v_in_h1 : v_in_h2;
    side[size_t(g.edges()[i].u)] = 1;
    side[size_t(g.edges()[i].v)] = 1;
  }
  for (int w = 0; w < g.num_vertices(); ++w)
    if (v_in_h1[size_t(w)] && v_in_h2[size_t(w)] && w != v)
      throw std::invalid_argument("sides share a vertex other than v");
  int u1 = v_in_h1[size_t(e.u)] || e.u == v ? e.u : e.v;
  int u2 = u1 == e.u ? e.v : e.u;
  if (!(v_in_h1[size_t(u1)] && v_in_h2[size_t(u2)]))
    throw std::invalid_argument("edge ends must land one per side");
  auto build = [&](bool first, int attach) {
    Multigraph h(g.num_vertices());
    for (size_t i = 0; i < g.edges().size(); ++i) {
      if (g.edges()[i].id == e_id) continue;
      if (bool(in_h1[i]) == first) h.add_edge(g.edges()[i].u, g.edges()[i].v);
    }
    h.add_edge(v, attach);
    return h;
  };
  Poly lhs = flow_poly(g) * (Poly::x() - Poly(1));
  Poly rhs = flow_poly(build(true, u1)) * flow_poly(build(false, u2));
  if (lhs == rhs) return report_pass("jackson-vertex-split", instance);
  return report_fail("jackson-vertex-split", instance, lhs.str(), rhs.str());
}

// k-edge-cut factorization (k = 2 or 3): G_i contracts the far side; then
// F(G) times (x-1) (resp. (x-1)(x-2)) equals F(G_1) F(G_2).
inline IdentityReport jackson_cut_check(const Multigraph& g, const std::vector<int>& cut_ids,
                                        const std::string& instance) {
  size_t k = cut_ids.size();
  if (k != 2 && k != 3) throw std::invalid_argument("cut must have 2 or 3 edges");
  std::vector<char> keep(size_t(g.num_edges()), 1);
  for (int id : cut_ids) {
    bool found = false;
    for (size_t i = 0; i < g.edges().size(); ++i)
      if (g.edges()[i].id == id) {
        keep[i] = 0;
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown cut edge");
  }
  if (g.components(keep) != g.components() + 1)
    throw std::invalid_argument("edges do not form a 2-sided cut");
  // the two sides are components of G minus the cut
  detail::UnionFind uf(g.num_vertices());
  for (size_t i = 0; i < g.edges().size(); ++i)
    if (keep[i]) uf.unite(g.edges()[i].u, g.edges()[i].v);
  const Edge& probe = g.edge(cut_ids[0]);
  int side1 = uf.find(probe.u), side2 = uf.find(probe.v);
  if (side1 == side2) throw std::invalid_argument("cut edge inside one side");
  for (int id : cut_ids) {
    const Edge& e = g.edge(id);
    int a = uf.find(e.u), b = uf.find(e.v);
    if (!((a == side1 && b == side2) || (a == side2 && b == side1)))
      throw std::invalid_argument("cut edges must straddle the same two sides");
  }
  // G_i contracts the far side to a single vertex; cut edges survive
  auto build_contracted = [&](int far_root) {
    std::vector<int> map(size_t(g.num_vertices()), -1);
    int next = 0, merged = -1;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (uf.find(v) == far_root) {
        if (merged < 0) merged = next++;
        map[size_t(v)] = merged;
      } else {
        map[size_t(v)] = next++;
      }
    }
    Multigraph h(next);
    for (const Edge& e : g.edges()) {
      if (uf.find(e.u) == far_root && uf.find(e.v) == far_root) continue;
      h.add_edge(map[size_t(e.u)], map[size_t(e.v)]);
    }
    return h;
  };
  Poly g1 = flow_poly(build_contracted(side2));  // keeps side 1
  Poly g2 = flow_poly(build_contracted(side1));
  Poly denom = (k == 2) ? (Poly::x() - Poly(1))
                        : (Poly::x() - Poly(1)) * (Poly::x() - Poly(2));
  Poly left = flow_poly(g) * denom;
  Poly right = g1 * g2;
  if (left == right) return report_pass(k == 2 ? "jackson-2-cut" : "jackson-3-cut", instance);
  return report_fail(k == 2 ? "jackson-2-cut" : "jackson-3-cut", instance, left.str(),
                     right.str());
}

}  // namespace polyforge
