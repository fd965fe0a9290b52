#pragma once

#include <polyforge/bipoly.hpp>
#include <polyforge/multigraph.hpp>
#include <polyforge/poly.hpp>
#include <polyforge/report.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace polyforge {

using WeightMap = std::map<int, Rat>;

namespace detail {

// q-coefficient vector of Z_G(q, {w_e}) over a commutative coefficient ring R
// (Rat for numeric weights, Poly-in-y for the uniform mode). Deletion and
// contraction with loop/bridge factors and eager parallel reduction; series
// reduction is excluded here because it leaves the polynomial ring in q.
template <class R>
std::vector<R> potts_dc_impl(const Multigraph& g, std::map<int, R> w) {
  const int n = g.num_vertices();
  // loops pull out scalar factors (1 + w)
  for (const Edge& e : g.edges()) {
    if (e.u != e.v) continue;
    R f = R(1) + w.at(e.id);
    auto rest = potts_dc_impl(g.delete_edge(e.id), std::move(w));
    for (R& c : rest) c = c * f;
    return rest;
  }
  // eager parallel reduction: merge any two parallel edges
  for (size_t i = 0; i < g.edges().size(); ++i)
    for (size_t j = i + 1; j < g.edges().size(); ++j) {
      const Edge &a = g.edges()[i], &b = g.edges()[j];
      if (std::min(a.u, a.v) != std::min(b.u, b.v) ||
          std::max(a.u, a.v) != std::max(b.u, b.v))
        continue;
      R wa = w.at(a.id), wb = w.at(b.id);
      w[a.id] = wa + wb + wa * wb;  // (1+w1)(1+w2) - 1
      w.erase(b.id);
      return potts_dc_impl(g.delete_edge(b.id), std::move(w));
    }
  if (g.num_edges() == 0) {
    std::vector<R> out(size_t(n) + 1, R(0));
    out[size_t(n)] = R(1);
    return out;
  }
  // bridges contribute a (q + w) factor on the contraction
  for (const Edge& e : g.edges()) {
    if (g.classify_edge(e.id) != EdgeKind::Bridge) continue;
    R we = w.at(e.id);
    w.erase(e.id);
    auto rest = potts_dc_impl(g.contract_edge_multi(e.id), std::move(w));
    std::vector<R> out(rest.size() + 1, R(0));
    for (size_t i = 0; i < rest.size(); ++i) {
      out[i + 1] = out[i + 1] + rest[i];       // q * Z
      out[i] = out[i] + we * rest[i];          // w * Z
    }
    while (out.size() > size_t(n) + 1) out.pop_back();
    return out;
  }
  // normal edge on a shortest cycle
  int best_id = -1, best_len = 1 << 30;
  for (const Edge& e : g.edges()) {
    // BFS distance u..v avoiding e
    std::vector<int> dist(size_t(n), -1);
    std::vector<int> q{e.u};
    dist[size_t(e.u)] = 0;
    for (size_t h = 0; h < q.size(); ++h) {
      int x = q[h];
      for (const Edge& f : g.edges()) {
        if (f.id == e.id) continue;
        int y = -1;
        if (f.u == x) y = f.v;
        if (f.v == x) y = f.u;
        if (y >= 0 && dist[size_t(y)] < 0) {
          dist[size_t(y)] = dist[size_t(x)] + 1;
          q.push_back(y);
        }
      }
    }
    int len = dist[size_t(e.v)];
    if (len >= 0 && len + 1 < best_len) {
      best_len = len + 1;
      best_id = e.id;
    }
  }
  const Edge& e = g.edge(best_id);
  R we = w.at(e.id);
  std::map<int, R> w2 = w;
  w.erase(e.id);
  w2.erase(e.id);
  auto del = potts_dc_impl(g.delete_edge(e.id), std::move(w2));
  auto con = potts_dc_impl(g.contract_edge_multi(e.id), std::move(w));
  std::vector<R> out(size_t(n) + 1, R(0));
  for (size_t i = 0; i < del.size(); ++i) out[i] = out[i] + del[i];
  for (size_t i = 0; i < con.size(); ++i) out[i] = out[i] + we * con[i];
  return out;
}

template <class R>
std::map<int, R> lift_weights(const Multigraph& g, const WeightMap& w) {
  std::map<int, R> out;
  for (const Edge& e : g.edges()) {
    auto it = w.find(e.id);
    if (it == w.end()) throw std::invalid_argument("weight map misses an edge");
    out.emplace(e.id, R(it->second));
  }
  return out;
}

}  // namespace detail

// Subset-expansion oracle: Z = sum over A of q^{c(A)} prod_{e in A} w_e.
inline Poly potts_subset(const Multigraph& g, const WeightMap& w) {
  if (g.num_edges() > 22) throw std::invalid_argument("potts_subset limited to 22 edges");
  for (const Edge& e : g.edges())
    if (!w.count(e.id)) throw std::invalid_argument("weight map misses an edge");
  int n = g.num_vertices();
  std::vector<Rat> acc(size_t(n) + 1, Rat(0));
  const auto& es = g.edges();
  std::function<void(size_t, detail::UnionFind&, int, Rat)> rec =
      [&](size_t i, detail::UnionFind& uf, int comps, Rat prod) {
        if (i == es.size()) {
          acc[size_t(comps)] += prod;
          return;
        }
        rec(i + 1, uf, comps, prod);  // exclude edge i
        detail::UnionFind uf2 = uf;
        int c2 = comps - (uf2.unite(es[i].u, es[i].v) ? 1 : 0);
        rec(i + 1, uf2, c2, prod * w.at(es[i].id));
      };
  detail::UnionFind uf(n);
  rec(0, uf, n, Rat(1));
  return Poly(std::move(acc));
}

// Uniform-weight subset expansion: Z_G(q, y) with w_e = y for every edge.
inline BiPoly potts_subset_uniform(const Multigraph& g) {
  if (g.num_edges() > 22) throw std::invalid_argument("potts_subset limited to 22 edges");
  int n = g.num_vertices();
  const auto& es = g.edges();
  BiPoly out;
  std::function<void(size_t, detail::UnionFind&, int, int)> rec =
      [&](size_t i, detail::UnionFind& uf, int comps, int count) {
        if (i == es.size()) {
          out.add_term(comps, count, Rat(1));
          return;
        }
        rec(i + 1, uf, comps, count);
        detail::UnionFind uf2 = uf;
        int c2 = comps - (uf2.unite(es[i].u, es[i].v) ? 1 : 0);
        rec(i + 1, uf2, c2, count + 1);
      };
  detail::UnionFind uf(n);
  rec(0, uf, n, 0);
  return out;  // terms q^i y^j
}

// Deletion-contraction route, symbolic in q with numeric rational weights.
inline Poly potts_dc(const Multigraph& g, const WeightMap& w) {
  auto coeffs = detail::potts_dc_impl<Rat>(g, detail::lift_weights<Rat>(g, w));
  return Poly(std::move(coeffs));
}

// Deletion-contraction in the uniform mode; returns Z_G(q,y) as a bivariate
// polynomial (q exponent, y exponent).
inline BiPoly potts_dc_uniform(const Multigraph& g) {
  std::map<int, Poly> w;
  for (const Edge& e : g.edges()) w.emplace(e.id, Poly::x());
  auto coeffs = detail::potts_dc_impl<Poly>(g, std::move(w));
  BiPoly out;
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (int j = 0; j <= coeffs[i].degree(); ++j)
      out.add_term(int(i), j, coeffs[i].coeff(j));
  return out;
}

// Fully numeric evaluation at a rational q: all reductions enabled, including
// the series rule w' = w1 w2 / (q + w1 + w2) with its prefactor. A vanishing
// denominator just disables that reduction instance.
inline Rat potts_eval(const Multigraph& g, const Rat& q, const WeightMap& wmap) {
  std::map<int, Rat> w = detail::lift_weights<Rat>(g, wmap);
  std::function<Rat(const Multigraph&, std::map<int, Rat>&)> eval =
      [&](const Multigraph& h, std::map<int, Rat>& wt) -> Rat {
    for (const Edge& e : h.edges()) {
      if (e.u != e.v) continue;
      Rat f = Rat(1) + wt.at(e.id);
      Multigraph d = h.delete_edge(e.id);
      return f * eval(d, wt);
    }
    for (size_t i = 0; i < h.edges().size(); ++i)
      for (size_t j = i + 1; j < h.edges().size(); ++j) {
        const Edge &a = h.edges()[i], &b = h.edges()[j];
        if (std::min(a.u, a.v) != std::min(b.u, b.v) ||
            std::max(a.u, a.v) != std::max(b.u, b.v))
          continue;
        Rat wa = wt.at(a.id), wb = wt.at(b.id);
        wt[a.id] = wa + wb + wa * wb;
        Multigraph d = h.delete_edge(b.id);
        return eval(d, wt);
      }
    // series reduction at a degree-2 vertex
    for (int v = 0; v < h.num_vertices(); ++v) {
      if (h.degree(v) != 2) continue;
      std::vector<const Edge*> inc;
      for (const Edge& e : h.edges())
        if (e.u == v || e.v == v) inc.push_back(&e);
      if (inc.size() != 2) continue;  // a loop at v counts twice in degree
      int x = inc[0]->u == v ? inc[0]->v : inc[0]->u;
      int z = inc[1]->u == v ? inc[1]->v : inc[1]->u;
      if (x == z) continue;  // parallel pair after reduction, not series
      Rat w1 = wt.at(inc[0]->id), w2 = wt.at(inc[1]->id);
      Rat denom = q + w1 + w2;
      if (denom == 0) continue;  // hypothesis of the identity not met
      // h' keeps v isolated and carries the merged edge xz; the isolated v
      // contributes a factor q that the prefactor division cancels
      Multigraph hp(h.num_vertices());
      int merged = -1;
      for (const Edge& e : h.edges()) {
        if (e.id == inc[0]->id || e.id == inc[1]->id) continue;
        hp.add_edge(e.u, e.v);
      }
      merged = hp.add_edge(x, z);
      std::map<int, Rat> wt2;
      {
        size_t k = 0;
        for (const Edge& e : h.edges()) {
          if (e.id == inc[0]->id || e.id == inc[1]->id) continue;
          wt2[hp.edges()[k].id] = wt.at(e.id);
          ++k;
        }
      }
      wt2[merged] = w1 * w2 / denom;
      // v is now isolated in hp and contributes a factor q at the base case
      return denom / q * eval(hp, wt2);
    }
    if (h.num_edges() == 0) return rat_pow(q, h.num_vertices());
    for (const Edge& e : h.edges()) {
      if (h.classify_edge(e.id) != EdgeKind::Bridge) continue;
      Rat we = wt.at(e.id);
      Multigraph c = h.contract_edge_multi(e.id);
      return (q + we) * eval(c, wt);
    }
    const Edge& e = h.edges()[0];
    Rat we = wt.at(e.id);
    Multigraph d = h.delete_edge(e.id);
    Multigraph c = h.contract_edge_multi(e.id);
    std::map<int, Rat> wt2 = wt;
    return eval(d, wt) + we * eval(c, wt2);
  };
  if (q == 0) {
    // the series prefactor divides by q; evaluate the subset form instead
    return potts_subset(g, wmap)(q);
  }
  return eval(g, w);
}

// Z_G(q, y) at numeric points with every weight equal to y, computed by a
// sweep over a vertex order: states are connectivity partitions of the active
// boundary, weights accumulate y per included edge and q per completed
// component. All requested (q, y) points share one traversal, so the cost is
// one pass over the reachable boundary partitions plus per-point arithmetic;
// circulant-like graphs far beyond subset-expansion range stay feasible.
template <class Num>
std::vector<Num> potts_sweep_multi(const Multigraph& g,
                                   const std::vector<std::pair<Num, Num>>& points,
                                   std::vector<int> order = {},
                                   const std::chrono::steady_clock::time_point* deadline =
                                       nullptr) {
  const size_t K = points.size();
  int n = g.num_vertices();
  if (order.empty()) {
    // greedy order: prefer a vertex with the most already-placed neighbors
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const Edge& e : g.edges())
      if (e.u != e.v) {
        adj[size_t(e.u)].push_back(e.v);
        adj[size_t(e.v)].push_back(e.u);
      }
    std::vector<char> placed(size_t(n), 0);
    for (int step = 0; step < n; ++step) {
      int best = -1, score = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[size_t(v)]) continue;
        int s = 0;
        for (int w : adj[size_t(v)]) s += placed[size_t(w)];
        if (s > score) {
          score = s;
          best = v;
        }
      }
      placed[size_t(best)] = 1;
      order.push_back(best);
    }
  }
  if (int(order.size()) != n) throw std::invalid_argument("order must list every vertex");
  std::vector<int> pos(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) pos[size_t(order[size_t(i)])] = i;
  std::vector<std::vector<int>> back_edges(static_cast<size_t>(n));  // keyed by position
  std::vector<int> loops(static_cast<size_t>(n), 0);
  std::vector<int> retire(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) retire[size_t(pos[size_t(v)])] = pos[size_t(v)];
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      ++loops[size_t(pos[size_t(e.u)])];
      continue;
    }
    int pu = pos[size_t(e.u)], pv = pos[size_t(e.v)];
    back_edges[size_t(std::max(pu, pv))].push_back(std::min(pu, pv));
    retire[size_t(std::min(pu, pv))] =
        std::max(retire[size_t(std::min(pu, pv))], std::max(pu, pv));
  }
  using Weights = std::vector<Num>;
  std::vector<int> active;  // positions, introduction order
  std::unordered_map<std::string, Weights> states;
  {
    Weights one(K);
    for (size_t k = 0; k < K; ++k) one[k] = Num(1);
    states.emplace(std::string(), std::move(one));
  }
  Weights global(K);
  for (size_t k = 0; k < K; ++k) global[k] = Num(1);
  auto canon = [](std::string blocks) {
    int maxb = -1;
    for (char b : blocks) maxb = std::max(maxb, int(b));
    std::array<int, 40> map;
    map.fill(-1);
    int next = 0;
    for (char& b : blocks) {
      if (map[size_t(b)] < 0) map[size_t(b)] = next++;
      b = char(map[size_t(b)]);
    }
    (void)maxb;
    return blocks;
  };
  auto add_state = [&](std::unordered_map<std::string, Weights>& dst, std::string key,
                       Weights w) {
    auto it = dst.find(key);
    if (it == dst.end()) {
      dst.emplace(std::move(key), std::move(w));
    } else {
      for (size_t k = 0; k < K; ++k) it->second[k] += w[k];
    }
  };
  for (int step = 0; step < n; ++step) {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw TimeoutError("partition sweep budget exhausted");
    if (int(active.size()) >= 38) throw std::invalid_argument("boundary too wide for sweep");
    active.push_back(step);
    {
      std::unordered_map<std::string, Weights> next;
      next.reserve(states.size() * 2);
      for (auto& [key, wgt] : states) {
        std::string k = key;
        int blocks = 0;
        for (char c : k) blocks = std::max(blocks, int(c) + 1);
        k.push_back(char(blocks));
        next.emplace(std::move(k), std::move(wgt));
      }
      states = std::move(next);
    }
    for (int l = 0; l < loops[size_t(step)]; ++l)
      for (size_t k = 0; k < K; ++k) global[k] *= Num(1) + points[k].second;
    for (int early : back_edges[size_t(step)]) {
      int iu = -1, iv = int(active.size()) - 1;
      for (size_t i = 0; i < active.size(); ++i)
        if (active[i] == early) iu = int(i);
      if (iu < 0) throw std::logic_error("endpoint retired too soon");
      std::unordered_map<std::string, Weights> next;
      next.reserve(states.size() * 2);
      for (const auto& [key, wgt] : states) {
        Weights inc(K);
        for (size_t k = 0; k < K; ++k) inc[k] = wgt[k] * points[k].second;
        char bu = key[size_t(iu)], bv = key[size_t(iv)];
        if (bu == bv) {
          // same block: include + exclude collapse onto one key
          Weights both = wgt;
          for (size_t k = 0; k < K; ++k) both[k] += inc[k];
          add_state(next, key, std::move(both));
        } else {
          add_state(next, key, wgt);
          std::string merged = key;
          for (char& b : merged)
            if (b == bv) b = bu;
          add_state(next, canon(std::move(merged)), std::move(inc));
        }
      }
      states = std::move(next);
    }
    // retire vertices whose last edge is processed; a block all of whose
    // members retire is a finished component (factor q per point)
    std::vector<int> keep_idx;
    std::vector<char> dropped(active.size(), 0);
    bool any_drop = false;
    for (size_t i = 0; i < active.size(); ++i) {
      if (retire[size_t(active[i])] <= step) {
        dropped[i] = 1;
        any_drop = true;
      } else {
        keep_idx.push_back(int(i));
      }
    }
    if (any_drop) {
      std::unordered_map<std::string, Weights> next;
      next.reserve(states.size());
      for (auto& [key, wgt] : states) {
        int nblocks = 0;
        for (char b : key) nblocks = std::max(nblocks, int(b) + 1);
        std::array<char, 40> survives;
        survives.fill(0);
        for (size_t i = 0; i < key.size(); ++i)
          if (!dropped[i]) survives[size_t(key[i])] = 1;
        Weights w = std::move(wgt);
        for (int b = 0; b < nblocks; ++b)
          if (!survives[size_t(b)])
            for (size_t k = 0; k < K; ++k) w[k] *= points[k].first;
        std::string reduced;
        reduced.reserve(keep_idx.size());
        for (int ki : keep_idx) reduced.push_back(key[size_t(ki)]);
        add_state(next, canon(std::move(reduced)), std::move(w));
      }
      states = std::move(next);
      std::vector<int> kept;
      for (int ki : keep_idx) kept.push_back(active[size_t(ki)]);
      active = std::move(kept);
    }
  }
  if (states.size() != 1 || !active.empty()) throw std::logic_error("sweep did not close");
  Weights out = states.begin()->second;
  for (size_t k = 0; k < K; ++k) out[k] *= global[k];
  return out;
}

inline Rat potts_value_sweep(const Multigraph& g, const Rat& q, const Rat& y,
                             std::vector<int> order = {},
                             const std::chrono::steady_clock::time_point* deadline = nullptr) {
  std::vector<std::pair<Rat, Rat>> pts{{q, y}};
  return potts_sweep_multi<Rat>(g, pts, std::move(order), deadline)[0];
}

// Whitney rank generating function R_G(x,y) = x^{-c} y^{-|V|} Z_G(xy, y).
inline BiPoly whitney_rank(const Multigraph& g) {
  BiPoly z = potts_subset_uniform(g);
  int c = g.components(), n = g.num_vertices();
  BiPoly out;
  for (const auto& [k, coeff] : z.terms()) {
    int i = k.first, j = k.second;  // q^i y^j
    out.add_term(i - c, i + j - n, coeff);
  }
  return out;
}

// T_G(x,y) = (x-1)^{-c} (y-1)^{-|V|} Z_G((x-1)(y-1), y-1).
inline BiPoly tutte_from_potts(const Multigraph& g) {
  BiPoly z = potts_subset_uniform(g);
  int c = g.components(), n = g.num_vertices();
  BiPoly xm1 = BiPoly::x() - BiPoly::one();
  BiPoly ym1 = BiPoly::y() - BiPoly::one();
  BiPoly out;
  for (const auto& [k, coeff] : z.terms()) {
    int a = k.first - c, b = k.first + k.second - n;
    out += xm1.pow(unsigned(a)) * ym1.pow(unsigned(b)) * coeff;
  }
  return out;
}

// ---- independent-set polynomial ----

struct VertexWeightedGraph {
  Multigraph graph;                      // adjacency structure (must be simple)
  std::vector<Rat> weight;               // one weight per vertex

  VertexWeightedGraph(Multigraph g, std::vector<Rat> w)
      : graph(std::move(g)), weight(std::move(w)) {
    if (!graph.is_simple()) throw std::invalid_argument("vertex-weighted graph must be simple");
    if (int(weight.size()) != graph.num_vertices())
      throw std::invalid_argument("weight per vertex required");
  }
};

// I(H,w) = sum over independent sets V' of prod_{u in V'} w(u), restricted to
// the vertices selected by `allowed` (all when empty). The empty set
// contributes 1.
inline Rat independence_value(const VertexWeightedGraph& h, uint32_t allowed = ~uint32_t(0)) {
  int n = h.graph.num_vertices();
  if (n > 25) throw std::invalid_argument("independence_value limited to 25 vertices");
  std::vector<uint32_t> nbr(size_t(n), 0);
  for (const Edge& e : h.graph.edges()) {
    nbr[size_t(e.u)] |= uint32_t(1) << e.v;
    nbr[size_t(e.v)] |= uint32_t(1) << e.u;
  }
  Rat total = 0;
  std::function<void(int, uint32_t, const Rat&)> rec = [&](int v, uint32_t banned,
                                                           const Rat& prod) {
    if (v == n) {
      total += prod;
      return;
    }
    rec(v + 1, banned, prod);
    if ((allowed >> v & 1) && !(banned >> v & 1) && h.weight[size_t(v)] != 0)
      rec(v + 1, banned | nbr[size_t(v)], prod * h.weight[size_t(v)]);
  };
  rec(0, 0, Rat(1));
  return total;
}

// ---- partition function -> independent-set polynomial bridge ----

// Builds the intersection graph on connected vertex subsets |S| >= 2 with
// w(S) = q^{1-|S|} sum over connected spanning (S,E') of prod w_e, and checks
// Z_G(q,{w_e}) / q^{|V|} = I(curly-G, w) exactly.
inline IdentityReport potts_to_independence(const Multigraph& g, const Rat& q,
                                            const WeightMap& w, const std::string& instance) {
  if (q == 0) throw std::invalid_argument("q must be nonzero");
  if (g.has_loop())
    throw std::invalid_argument("the independence bridge needs a loopless graph");
  int n = g.num_vertices();
  if (n > 6) throw std::invalid_argument("bridge check limited to 6 vertices");
  std::vector<uint32_t> subsets;
  std::vector<Rat> sweight;
  for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
    int size = __builtin_popcount(s);
    if (size < 2) continue;
    std::vector<const Edge*> inner;  // edges of G[S], parallels included
    for (const Edge& e : g.edges())
      if ((s >> e.u & 1) && (s >> e.v & 1)) inner.push_back(&e);
    auto connected_with = [&](uint32_t emask) {
      detail::UnionFind uf(n);
      int comps = size;
      for (size_t i = 0; i < inner.size(); ++i)
        if (emask >> i & 1 && uf.unite(inner[i]->u, inner[i]->v)) --comps;
      return comps == 1;
    };
    if (inner.size() > 20) throw std::invalid_argument("too many induced edges");
    if (!connected_with((uint32_t(1) << inner.size()) - 1)) continue;
    Rat sum = 0;
    for (uint32_t emask = 0; emask < (uint32_t(1) << inner.size()); ++emask) {
      if (!connected_with(emask)) continue;
      Rat prod = 1;
      for (size_t i = 0; i < inner.size(); ++i)
        if (emask >> i & 1) prod *= w.at(inner[i]->id);
      sum += prod;
    }
    subsets.push_back(s);
    sweight.push_back(rat_pow(q, 1 - size) * sum);
  }
  // intersection graph
  Multigraph ig(int(subsets.size()));
  for (size_t i = 0; i < subsets.size(); ++i)
    for (size_t j = i + 1; j < subsets.size(); ++j)
      if (subsets[i] & subsets[j]) ig.add_edge(int(i), int(j));
  VertexWeightedGraph h(ig, sweight);
  Rat rhs = independence_value(h);
  Rat lhs = potts_subset(g, w)(q) / rat_pow(q, n);
  if (lhs == rhs) return report_pass("potts-to-independence", instance);
  return report_fail("potts-to-independence", instance, to_string(lhs), to_string(rhs));
}

// Fernandez-Procacci condition: if |w(u)| I(G[N[u]], mu) <= mu(u) for all u
// then I(G[S], w) != 0 for every induced S; the conclusion is verified
// exhaustively whenever the hypothesis holds.
inline IdentityReport fp_condition_check(const VertexWeightedGraph& h,
                                         const std::vector<Rat>& mu,
                                         const std::string& instance) {
  int n = h.graph.num_vertices();
  if (n > 12) throw std::invalid_argument("fp check limited to 12 vertices");
  if (int(mu.size()) != n) throw std::invalid_argument("mu per vertex required");
  for (const Rat& m : mu)
    if (!(m > 0)) throw std::invalid_argument("mu must be positive");
  VertexWeightedGraph hmu(h.graph, mu);
  std::vector<uint32_t> nbr(size_t(n), 0);
  for (const Edge& e : h.graph.edges()) {
    nbr[size_t(e.u)] |= uint32_t(1) << e.v;
    nbr[size_t(e.v)] |= uint32_t(1) << e.u;
  }
  for (int u = 0; u < n; ++u) {
    uint32_t closed = nbr[size_t(u)] | (uint32_t(1) << u);
    Rat lhs = h.weight[size_t(u)] < 0 ? -h.weight[size_t(u)] : h.weight[size_t(u)];
    lhs *= independence_value(hmu, closed);
    if (lhs > mu[size_t(u)])
      return {"fernandez-procacci", instance, true,
              "hypothesis-failed at vertex " + std::to_string(u) + "; conclusion not asserted"};
  }
  for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
    if (independence_value(h, s) == 0)
      return report_fail("fernandez-procacci", instance,
                         "I(G[S],w) = 0 at S mask " + std::to_string(s), "nonzero required");
  }
  return report_pass("fernandez-procacci", instance, "hypothesis-held");
}

// ---- empirical sign probes ----

struct SignProbeSample {
  Rat q;
  WeightMap weights;
};

// Probes the two sign statements: (-1)^|V| Z > 0 for q < 0 with all weights
// in [-1,0), and (-1)^{n+c} Z > 0 in the Jackson-Sokal regime for q in (0,1).
// Out-of-regime samples are skipped; an in-regime violation fails the report.
inline IdentityReport sign_probes(const Multigraph& g,
                                  const std::vector<SignProbeSample>& samples,
                                  const std::string& instance) {
  int n = g.num_vertices(), c = g.components();
  int checked = 0, skipped = 0;
  for (const auto& s : samples) {
    bool que1 = s.q < 0;
    if (que1)
      for (const Edge& e : g.edges()) {
        const Rat& w = s.weights.at(e.id);
        if (!(w >= -1 && w < 0)) que1 = false;
      }
    bool theo2 = s.q > 0 && s.q < 1;
    if (theo2)
      for (const Edge& e : g.edges()) {
        const Rat& w = s.weights.at(e.id);
        switch (g.classify_edge(e.id)) {
          case EdgeKind::Loop:
            if (!(w > -1)) theo2 = false;
            break;
          case EdgeKind::Bridge:
            if (!(w < -s.q)) theo2 = false;
            break;
          case EdgeKind::Normal: {
            Rat shifted = w + 1;
            if (!(shifted * shifted < 1 - s.q)) theo2 = false;
            break;
          }
        }
      }
    if (!que1 && !theo2) {
      ++skipped;
      continue;
    }
    Rat z = potts_subset(g, s.weights)(s.q);
    int parity = que1 ? n : n + c;
    Rat signed_z = (parity % 2) ? -z : z;
    if (!(signed_z > 0))
      return report_fail(que1 ? "sign-que1" : "sign-jackson-sokal", instance,
                         "signed Z = " + to_string(signed_z), "> 0");
    ++checked;
  }
  return report_pass("sign-probes", instance,
                     std::to_string(checked) + " checked, " + std::to_string(skipped) +
                         " skipped (out of regime)");
}

}  // namespace polyforge
