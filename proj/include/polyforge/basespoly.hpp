#pragma once

#include <polyforge/bases.hpp>
#include <polyforge/flowchrom.hpp>
#include <polyforge/graph6.hpp>
#include <polyforge/iso.hpp>
#include <polyforge/multigraph.hpp>
#include <polyforge/report.hpp>
#include <polyforge/sturm.hpp>

#include <atomic>
#include <string>
#include <thread>
#include <vector>

namespace polyforge {

// The chromatic polynomial of a simple graph together with its coefficient
// vectors in the three transfer bases: chi = sum a_i (x)_i
//                                          = sum w_i C(x+p-i, p)
//                                          = sum (-1)^{p-i} c_i <x>_i.
struct GraphPolys {
  int p = 0;
  Poly chi;
  std::vector<Rat> a, w, c;
  Poly sigma, sigma_bar, wpoly, tau, tau_bar;
};

inline GraphPolys compute_polys(const Multigraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("sigma/w/tau need a simple graph");
  GraphPolys out;
  out.p = g.num_vertices();
  out.chi = chromatic_poly(g);
  out.a = poly_to_basis(out.chi, BasisTag::Falling, out.p);
  out.w = poly_to_basis(out.chi, BasisTag::ShiftedBinomial, out.p);
  std::vector<Rat> rising = poly_to_basis(out.chi, BasisTag::Rising, out.p);
  out.c.resize(rising.size());
  for (int i = 0; i <= out.p; ++i)
    out.c[size_t(i)] = ((out.p - i) % 2) ? -rising[size_t(i)] : rising[size_t(i)];
  for (int i = 0; i <= out.p; ++i) {
    Rat fi(factorial(unsigned(i)), 1);
    out.sigma += Poly::monomial(i, out.a[size_t(i)]);
    out.sigma_bar += Poly::monomial(i, out.a[size_t(i)] * fi);
    out.wpoly += Poly::monomial(i, out.w[size_t(i)]);
    out.tau += Poly::monomial(i, out.c[size_t(i)]);
    out.tau_bar += Poly::monomial(i, out.c[size_t(i)] * fi);
  }
  return out;
}

inline Poly sigma_poly(const Multigraph& g) { return compute_polys(g).sigma; }
inline Poly sigma_bar_poly(const Multigraph& g) { return compute_polys(g).sigma_bar; }
inline Poly w_poly(const Multigraph& g) { return compute_polys(g).wpoly; }
inline Poly tau_poly(const Multigraph& g) { return compute_polys(g).tau; }
inline Poly tau_bar_poly(const Multigraph& g) { return compute_polys(g).tau_bar; }

// h(G,x) = sigma of the complement: partitions into cliques.
inline Poly adjoint_poly(const Multigraph& g) { return sigma_poly(complement(g)); }

// ---- independent cross-check routes ----

// a_i as the number of partitions of V into i nonempty independent sets,
// by direct enumeration (p <= 7).
inline std::vector<BigInt> sigma_coeffs_by_partitions(const Multigraph& g) {
  int p = g.num_vertices();
  if (p > 7) throw std::invalid_argument("partition oracle limited to 7 vertices");
  std::vector<uint16_t> adj(static_cast<size_t>(p), 0);
  for (const Edge& e : g.edges()) {
    adj[size_t(e.u)] |= uint16_t(1) << e.v;
    adj[size_t(e.v)] |= uint16_t(1) << e.u;
  }
  std::vector<BigInt> out(size_t(p) + 1, BigInt(0));
  for_each_partition(p, [&](const SetPartition& part) {
    for (const auto& block : part.blocks)
      for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j)
          if (adj[size_t(block[i])] >> block[j] & 1) return;
    out[size_t(part.size())] += 1;
  });
  return out;
}

// tau by the deletion-contraction recursion with tau(N_p) = B_p(x).
inline Poly tau_by_recursion(const Multigraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("tau recursion needs a simple graph");
  if (g.num_edges() == 0) return bell_poly(g.num_vertices());
  int id = g.edges()[0].id;
  return tau_by_recursion(g.delete_edge(id)) + tau_by_recursion(g.contract_edge_simple(id));
}

// tau(G,x) = sum over set partitions of |A(G(P))| x^{|P|}, orientation counts
// by direct enumeration (p <= 6).
inline Poly tau_by_partition_orientations(const Multigraph& g) {
  int p = g.num_vertices();
  if (p > 6) throw std::invalid_argument("partition-orientation oracle limited to 6 vertices");
  Poly out;
  for_each_partition(p, [&](const SetPartition& part) {
    Multigraph gp = induced_partition_graph(g, part);
    out += Poly::monomial(part.size(), Rat(acyclic_orientation_count_enum(gp), 1));
  });
  return out;
}

// w by the Brenti recursion w(G) = w(G+uv) + (1-x) w(G.uv).
inline Poly w_by_recursion(const Multigraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("w recursion needs a simple graph");
  int p = g.num_vertices();
  // find a non-adjacent pair
  std::vector<uint16_t> adj(static_cast<size_t>(p), 0);
  for (const Edge& e : g.edges()) {
    adj[size_t(e.u)] |= uint16_t(1) << e.v;
    adj[size_t(e.v)] |= uint16_t(1) << e.u;
  }
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) {
      if (adj[size_t(u)] >> v & 1) continue;
      Multigraph plus = g;
      int id = plus.add_edge(u, v);
      Multigraph merged = plus.contract_edge_simple(id);
      return w_by_recursion(plus) + (Poly(1) - Poly::x()) * w_by_recursion(merged);
    }
  return Poly::monomial(p, Rat(factorial(unsigned(p)), 1));  // complete graph
}

// ---- the identity suite ----

inline std::vector<IdentityReport> identity_suite(const Multigraph& g,
                                                  const std::string& instance) {
  if (!g.is_simple()) throw std::invalid_argument("identity suite needs a simple graph");
  int p = g.num_vertices();
  if (p > 9) throw std::invalid_argument("identity suite limited to 9 vertices");
  GraphPolys gp = compute_polys(g);
  std::vector<IdentityReport> out;
  auto check = [&](const std::string& name, bool ok, const std::string& l,
                   const std::string& r) {
    out.push_back(ok ? report_pass(name, instance) : report_fail(name, instance, l, r));
  };

  // (1) power series of w(G,x)/(1-x)^{p+1} generates chi(G,k)
  {
    auto coeffs = series_coeffs(gp.wpoly, p, 2 * p);
    bool ok = true;
    for (int k = 0; k <= 2 * p && ok; ++k) ok = coeffs[size_t(k)] == gp.chi(Rat(k));
    check("series-chi", ok, "series", "chi values");
  }
  // (2) w(G,x) = sum a_i i! x^i (1-x)^{p-i}
  {
    Poly rhs;
    for (int i = 0; i <= p; ++i)
      rhs += Poly::monomial(i, gp.a[size_t(i)] * Rat(factorial(unsigned(i)), 1)) *
             (Poly(1) - Poly::x()).pow(unsigned(p - i));
    check("w-from-sigma", gp.wpoly == rhs, gp.wpoly.str(), rhs.str());
  }
  // (3) i! c_i = sum_k C(k-1, p-i) w_k
  {
    bool ok = true;
    std::string why;
    for (int i = 0; i <= p && ok; ++i) {
      Rat lhs = gp.c[size_t(i)] * Rat(factorial(unsigned(i)), 1);
      Rat rhs = 0;
      for (int k = 0; k <= p; ++k)
        rhs += gp.w[size_t(k)] * Rat(binomial(BigInt(k - 1), unsigned(p - i)), 1);
      if (lhs != rhs) {
        ok = false;
        why = "i=" + std::to_string(i);
      }
    }
    check("w-from-tau", ok, why, "coefficient identity");
  }
  // (4) (-1)^p (y+1) tau-bar(y) = y sigma-bar(-1-y)
  {
    Poly lhs = gp.tau_bar * (Poly::x() + Poly(1));
    if (p % 2) lhs *= Rat(-1);
    Poly rhs = Poly::x() * gp.sigma_bar.compose(Poly(-1) - Poly::x());
    check("sigmabar-taubar", lhs == rhs, lhs.str(), rhs.str());
  }
  // (5) tau = sum b_k B_k and sigma = sum (-1)^{p-k} b_k B_k
  {
    Poly tau_rhs, sigma_rhs;
    for (int k = 0; k <= p; ++k) {
      Rat bk = gp.chi.coeff(k);
      if ((p - k) % 2) bk = -bk;
      tau_rhs += bell_poly(k) * bk;
      sigma_rhs += bell_poly(k) * (((p - k) % 2) ? -bk : bk);
    }
    check("tau-bell", gp.tau == tau_rhs, gp.tau.str(), tau_rhs.str());
    check("sigma-bell", gp.sigma == sigma_rhs, gp.sigma.str(), sigma_rhs.str());
  }
  // (6) a_i = sum_k (-1)^{p-k} (k-i)! C(k,i) C(k-1,k-i) c_k
  {
    bool ok = true;
    std::string why;
    for (int i = 0; i <= p && ok; ++i) {
      Rat rhs = 0;
      for (int k = i; k <= p; ++k) {
        Rat term = gp.c[size_t(k)] * Rat(factorial(unsigned(k - i)), 1) *
                   Rat(binomial(unsigned(k), unsigned(i)), 1) *
                   Rat(binomial(BigInt(k - 1), unsigned(k - i)), 1);
        rhs += ((p - k) % 2) ? -term : term;
      }
      if (gp.a[size_t(i)] != rhs) {
        ok = false;
        why = "i=" + std::to_string(i);
      }
    }
    check("sigma-from-tau", ok, why, "coefficient identity");
  }
  // (7) tau(K_p) = sum_k c(p,k) B_k
  {
    Poly lhs = tau_poly(complete_graph(p));
    Poly rhs;
    for (int k = 0; k <= p; ++k) rhs += bell_poly(k) * Rat(stirling1_unsigned(p, k), 1);
    check("tau-complete-stirling", lhs == rhs, lhs.str(), rhs.str());
  }
  // (8) w(G,1) = p!, w_p = |A(G)|, w_i = 0 below chi(G) and > 0 from there on
  {
    bool ok = gp.wpoly(Rat(1)) == Rat(factorial(unsigned(p)), 1);
    Rat acyclic = gp.chi(Rat(-1));
    if (p % 2) acyclic = -acyclic;
    ok = ok && gp.w[size_t(p)] == acyclic;
    if (g.num_edges() <= 14) ok = ok && acyclic == Rat(acyclic_orientation_count_enum(g), 1);
    int cn = p == 0 ? 0 : chromatic_number(g);
    for (int i = 0; i <= p; ++i) {
      if (i < cn)
        ok = ok && gp.w[size_t(i)] == 0;
      else
        ok = ok && gp.w[size_t(i)] > 0;
    }
    check("w-coefficients", ok, "w vector", "positivity/count profile");
  }
  // (9) simplicial vertex: tau(G) = x tau'(G-u) + (x+k) tau(G-u)
  {
    std::vector<uint16_t> adj(static_cast<size_t>(std::max(p, 1)), 0);
    for (const Edge& e : g.edges()) {
      adj[size_t(e.u)] |= uint16_t(1) << e.v;
      adj[size_t(e.v)] |= uint16_t(1) << e.u;
    }
    int simplicial = -1;
    for (int u = 0; u < p && simplicial < 0; ++u) {
      bool clique = true;
      for (int x = 0; x < p && clique; ++x)
        for (int y = x + 1; y < p && clique; ++y)
          if ((adj[size_t(u)] >> x & 1) && (adj[size_t(u)] >> y & 1) &&
              !(adj[size_t(x)] >> y & 1))
            clique = false;
      if (clique) simplicial = u;
    }
    if (simplicial < 0 || p == 0) {
      out.push_back(report_pass("tau-simplicial", instance, "no simplicial vertex; vacuous"));
    } else {
      int deg = __builtin_popcount(adj[size_t(simplicial)]);
      std::vector<int> rest;
      for (int v = 0; v < p; ++v)
        if (v != simplicial) rest.push_back(v);
      Poly tau_minus = tau_poly(g.induced(rest));
      Poly rhs = Poly::x() * tau_minus.derivative() + (Poly::x() + Poly(Rat(deg))) * tau_minus;
      check("tau-simplicial", gp.tau == rhs, gp.tau.str(), rhs.str());
    }
  }
  // (10) a_p = 1, a_{p-1} = C(p,2) - q, c_{p-1} = C(p,2) + q
  {
    Rat q(g.num_edges());
    bool ok = gp.a[size_t(p)] == 1 && gp.c[size_t(p)] == 1;
    if (p >= 1) {
      Rat pairs(binomial(unsigned(p), 2u), 1);
      ok = ok && gp.a[size_t(p - 1)] == pairs - q;
      ok = ok && gp.c[size_t(p - 1)] == pairs + q;
    }
    check("extreme-coefficients", ok, "a/c extremes", "C(p,2) -/+ q");
  }
  return out;
}

// ---- realness and the census ----

struct Realness {
  bool sigma_real;
  bool w_real;
  bool tau_real;
};

inline Realness realness(const GraphPolys& gp) {
  return {all_roots_real(gp.sigma), all_roots_real(gp.wpoly), all_roots_real(gp.tau)};
}

inline Realness realness(const Multigraph& g) { return realness(compute_polys(g)); }

struct CensusRow {
  int order = 0;
  long long graphs_scanned = 0;
  long long sigma_unreal = 0;
  long long w_unreal = 0;
  long long tau_unreal = 0;
  std::vector<std::string> sigma_witnesses;  // graph6
  std::vector<std::string> w_witnesses;
  std::vector<std::string> tau_witnesses;
};

// Counts sigma/w/tau-unreal graphs over the given connected-graph list.
// Parallel over graphs with deterministic aggregation; witness collection is
// optional because the w list gets large from order 7 on.
inline CensusRow census_from_graphs(int order, const std::vector<Multigraph>& graphs,
                                    int jobs = 1, bool witnesses = false) {
  CensusRow row;
  row.order = order;
  row.graphs_scanned = (long long)graphs.size();
  std::vector<uint8_t> flags(graphs.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= graphs.size()) break;
      Realness r = realness(graphs[i]);
      flags[i] = uint8_t((r.sigma_real ? 0 : 1) | (r.w_real ? 0 : 2) | (r.tau_real ? 0 : 4));
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (size_t i = 0; i < graphs.size(); ++i) {
    if (flags[i] & 1) {
      ++row.sigma_unreal;
      if (witnesses) row.sigma_witnesses.push_back(graph6_encode(graphs[i]));
    }
    if (flags[i] & 2) {
      ++row.w_unreal;
      if (witnesses) row.w_witnesses.push_back(graph6_encode(graphs[i]));
    }
    if (flags[i] & 4) {
      ++row.tau_unreal;
      if (witnesses) row.tau_witnesses.push_back(graph6_encode(graphs[i]));
    }
  }
  return row;
}

inline CensusRow census_builtin(int order, int jobs = 1, bool witnesses = false) {
  return census_from_graphs(order, connected_graph_stream(order), jobs, witnesses);
}

// ---- conjecture harnesses ----

struct HarnessReport {
  std::string name;
  long long instances = 0;
  long long counterexamples = 0;
  std::vector<std::string> witnesses;
  bool clean() const { return counterexamples == 0; }
};

// Is every graph tau-real? Scans the corpus.
inline HarnessReport tau_real_scan(const std::vector<Multigraph>& corpus) {
  HarnessReport hr;
  hr.name = "every-graph-tau-real";
  for (const Multigraph& g : corpus) {
    ++hr.instances;
    if (!all_roots_real(compute_polys(g).tau)) {
      ++hr.counterexamples;
      hr.witnesses.push_back(graph6_encode(g));
    }
  }
  return hr;
}

// sigma-real whenever chi(G) >= p - 3.
inline HarnessReport sigma_high_chromatic_scan(const std::vector<Multigraph>& corpus) {
  HarnessReport hr;
  hr.name = "sigma-real-when-chi-ge-p-3";
  for (const Multigraph& g : corpus) {
    int p = g.num_vertices();
    if (p == 0 || chromatic_number(g) < p - 3) continue;
    ++hr.instances;
    if (!all_roots_real(compute_polys(g).sigma)) {
      ++hr.counterexamples;
      hr.witnesses.push_back(graph6_encode(g));
    }
  }
  return hr;
}

// Clique-glued unions of real graphs stay real (w and tau variants), scanned
// constructively over pairs from the corpus glued along a shared clique.
inline HarnessReport clique_glue_scan(const std::vector<Multigraph>& corpus, int max_order,
                                      bool use_tau) {
  HarnessReport hr;
  hr.name = use_tau ? "tau-real-clique-glue" : "w-real-clique-glue";
  for (const Multigraph& g1 : corpus)
    for (const Multigraph& g2 : corpus) {
      // find a clique in each of size s and glue
      for (int s = 1; s <= 3; ++s) {
        int order = g1.num_vertices() + g2.num_vertices() - s;
        if (order > max_order) continue;
        // use the lexicographically first clique of size s in each
        auto find_clique = [&](const Multigraph& g) -> std::vector<int> {
          int p = g.num_vertices();
          std::vector<uint16_t> adj(static_cast<size_t>(p), 0);
          for (const Edge& e : g.edges()) {
            adj[size_t(e.u)] |= uint16_t(1) << e.v;
            adj[size_t(e.v)] |= uint16_t(1) << e.u;
          }
          std::vector<int> pick;
          std::function<bool(int)> grow = [&](int from) -> bool {
            if (int(pick.size()) == s) return true;
            for (int v = from; v < p; ++v) {
              bool ok = true;
              for (int u : pick) ok = ok && (adj[size_t(u)] >> v & 1);
              if (!ok) continue;
              pick.push_back(v);
              if (grow(v + 1)) return true;
              pick.pop_back();
            }
            return false;
          };
          if (!grow(0)) pick.clear();
          return pick;
        };
        std::vector<int> c1 = find_clique(g1), c2 = find_clique(g2);
        if (int(c1.size()) != s || int(c2.size()) != s) continue;
        // glued graph: identify c1[i] with c2[i]
        int p1 = g1.num_vertices();
        std::vector<int> map2(size_t(g2.num_vertices()), -1);
        for (int i = 0; i < s; ++i) map2[size_t(c2[size_t(i)])] = c1[size_t(i)];
        int next = p1;
        for (int v = 0; v < g2.num_vertices(); ++v)
          if (map2[size_t(v)] < 0) map2[size_t(v)] = next++;
        Multigraph glued(next);
        for (const Edge& e : g1.edges()) glued.add_edge(e.u, e.v);
        for (const Edge& e : g2.edges()) glued.add_edge(map2[size_t(e.u)], map2[size_t(e.v)]);
        Multigraph sg = glued.simplify();
        auto real = [&](const Multigraph& g) {
          GraphPolys gp = compute_polys(g);
          return use_tau ? all_roots_real(gp.tau) : all_roots_real(gp.wpoly);
        };
        if (!real(g1) || !real(g2)) continue;
        ++hr.instances;
        if (!real(sg)) {
          ++hr.counterexamples;
          hr.witnesses.push_back(graph6_encode(sg));
        }
      }
    }
  return hr;
}

// Joins of tau-real graphs stay tau-real.
inline HarnessReport tau_join_scan(const std::vector<Multigraph>& corpus, int max_order) {
  HarnessReport hr;
  hr.name = "tau-real-join";
  for (const Multigraph& g1 : corpus)
    for (const Multigraph& g2 : corpus) {
      if (g1.num_vertices() + g2.num_vertices() > max_order) continue;
      if (!all_roots_real(compute_polys(g1).tau) || !all_roots_real(compute_polys(g2).tau))
        continue;
      ++hr.instances;
      Multigraph j = join(g1, g2);
      if (!all_roots_real(compute_polys(j).tau)) {
        ++hr.counterexamples;
        hr.witnesses.push_back(graph6_encode(j));
      }
    }
  return hr;
}

// The c_{p-2} closed-form question: evaluated, outcome reported.
struct Que51Report {
  long long holds = 0;
  long long fails = 0;
  std::vector<std::string> fail_witnesses;
};

// Brenti's printed a_{p-2} formula, evaluated as printed (the q C(q-1,2) and
// C(p,3) C(3p-5,4) terms look garbled); discrepancies are reported, never
// patched. The reference value is the partition count a_{p-2} itself.
inline Que51Report brenti_a_pm2_report(const std::vector<Multigraph>& corpus) {
  Que51Report rep;
  for (const Multigraph& g : corpus) {
    int p = g.num_vertices();
    if (p < 2) continue;
    GraphPolys gp = compute_polys(g);
    long long q = g.num_edges();
    long long triangles = 0;
    std::vector<uint16_t> adj(static_cast<size_t>(p), 0);
    for (const Edge& e : g.edges()) {
      adj[size_t(e.u)] |= uint16_t(1) << e.v;
      adj[size_t(e.v)] |= uint16_t(1) << e.u;
    }
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b)
        for (int c = b + 1; c < p; ++c)
          if ((adj[size_t(a)] >> b & 1) && (adj[size_t(a)] >> c & 1) &&
              (adj[size_t(b)] >> c & 1))
            ++triangles;
    Rat formula = Rat(binomial(unsigned(q), 2u), 1) -
                  Rat(q) * Rat(binomial(unsigned(std::max<long long>(q, 1) - 1), 2u), 1) +
                  Rat(binomial(unsigned(p), 3u) * binomial(unsigned(3 * p - 5), 4u), 1) -
                  Rat(triangles);
    if (gp.a[size_t(p - 2)] == formula)
      ++rep.holds;
    else {
      ++rep.fails;
      if (rep.fail_witnesses.size() < 5) rep.fail_witnesses.push_back(graph6_encode(g));
    }
  }
  return rep;
}

inline Que51Report que5_1_report(const std::vector<Multigraph>& corpus) {
  Que51Report rep;
  for (const Multigraph& g : corpus) {
    int p = g.num_vertices();
    if (p < 2) continue;
    GraphPolys gp = compute_polys(g);
    long long q = g.num_edges();
    // m_2: two-edge matchings; l_i: induced 3-vertex subgraphs with i edges
    long long m2 = 0;
    for (int i = 0; i < g.num_edges(); ++i)
      for (int j = i + 1; j < g.num_edges(); ++j) {
        const Edge &a = g.edges()[size_t(i)], &b = g.edges()[size_t(j)];
        if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) ++m2;
      }
    std::vector<uint16_t> adj(static_cast<size_t>(p), 0);
    for (const Edge& e : g.edges()) {
      adj[size_t(e.u)] |= uint16_t(1) << e.v;
      adj[size_t(e.v)] |= uint16_t(1) << e.u;
    }
    long long l[4] = {0, 0, 0, 0};
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b)
        for (int c = b + 1; c < p; ++c) {
          int cnt = ((adj[size_t(a)] >> b) & 1) + ((adj[size_t(a)] >> c) & 1) +
                    ((adj[size_t(b)] >> c) & 1);
          ++l[cnt];
        }
    Rat formula = Rat(binomial(unsigned(p), 3u), 1) + Rat(3) * Rat(binomial(unsigned(p), 4u), 1) +
                  Rat(q) * Rat(binomial(unsigned(p - 2), 2u), 1) + Rat(m2);
    for (int i = 1; i <= 3; ++i) formula += Rat(l[i]) * Rat(2 * i - 1);
    if (gp.c[size_t(p - 2)] == formula)
      ++rep.holds;
    else {
      ++rep.fails;
      if (rep.fail_witnesses.size() < 5) rep.fail_witnesses.push_back(graph6_encode(g));
    }
  }
  return rep;
}

}  // namespace polyforge
