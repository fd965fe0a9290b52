// Acceptance suite: one line per criterion, exit 0 iff every gating criterion
// holds. Run with no arguments for all criteria or with a list of criterion
// numbers (1..8).

#include <polyforge/basespoly.hpp>
#include <polyforge/flowchrom.hpp>
#include <polyforge/iso.hpp>
#include <polyforge/matroid.hpp>
#include <polyforge/orderpoly.hpp>
#include <polyforge/potts.hpp>
#include <polyforge/sturm.hpp>
#include <polyforge/tutte.hpp>
#include <polyforge/verify.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace polyforge;

namespace {

struct Outcome {
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return int(std::min(hw == 0 ? 1u : hw, 8u));
}

Poly make_poly(std::initializer_list<long long> coeffs_low_to_high) {
  std::vector<Rat> c;
  for (long long v : coeffs_low_to_high) c.push_back(Rat(v));
  return Poly(std::move(c));
}

// ---- criterion 1: Potts oracle equivalence ----

Outcome criterion1() {
  Outcome out;
  std::mt19937 rng(112233);
  long long checks = 0;
  auto random_weights = [&](const Multigraph& g) {
    WeightMap w;
    for (const Edge& e : g.edges()) {
      int n = int(rng() % 13) - 6;
      if (n == 0) n = 1;
      w[e.id] = Rat(n, 1 + int(rng() % 5));
    }
    return w;
  };
  for (int n = 1; n <= 5 && out.pass; ++n)
    for (const PackedGraph& p : all_graphs(n)) {
      Multigraph g = unpack_graph(p);
      if (g.num_edges() > 8) continue;
      for (int rep = 0; rep < 2; ++rep) {
        WeightMap w = random_weights(g);
        ++checks;
        if (potts_dc(g, w) != potts_subset(g, w)) {
          out.pass = false;
          out.detail = "mismatch on a simple base graph";
          break;
        }
      }
    }
  for (int i = 0; i < 200 && out.pass; ++i) {
    int n = 1 + int(rng() % 5);
    Multigraph g(n);
    int m = int(rng() % 9);
    for (int k = 0; k < m; ++k) g.add_edge(int(rng() % unsigned(n)), int(rng() % unsigned(n)));
    WeightMap w = random_weights(g);
    ++checks;
    if (potts_dc(g, w) != potts_subset(g, w)) {
      out.pass = false;
      out.detail = "mismatch on a random multigraph";
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " oracle comparisons, all exact";
  return out;
}

// ---- criterion 2: paper golden values ----

Outcome criterion2() {
  Outcome out;
  std::ostringstream why;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      out.pass = false;
      why << what << "; ";
    }
  };
  std::mt19937 rng(445566);

  for (int n = 1; n <= 6; ++n)
    expect(potts_dc(empty_graph(n), {}) == Poly::monomial(n, Rat(1)), "Z(N_n)");
  {
    Multigraph k2 = complete_graph(2);
    WeightMap w{{0, Rat(7, 5)}};
    expect(potts_dc(k2, w) == Poly::x() * (Poly::x() + Poly(Rat(7, 5))), "Z(K_2)");
    BiPoly zk2 = potts_dc_uniform(k2);
    expect(zk2 == BiPoly::x().pow(2) + BiPoly::x() * BiPoly::y(), "Z(K_2) uniform");
  }
  for (int trial = 0; trial < 5; ++trial) {
    int n = 2 + int(rng() % 5);
    Multigraph t(n);
    for (int v = 1; v < n; ++v) t.add_edge(int(rng() % unsigned(v)), v);
    WeightMap w;
    Poly prod = Poly::x();
    for (const Edge& e : t.edges()) {
      w[e.id] = Rat(1 + int(rng() % 6), 1 + int(rng() % 4));
      prod *= Poly::x() + Poly(w[e.id]);
    }
    expect(potts_dc(t, w) == prod, "Z(tree)");
    Multigraph c = cycle_graph(n);
    WeightMap wc;
    Poly prodc = Poly::one();
    Rat wprod = 1;
    for (const Edge& e : c.edges()) {
      wc[e.id] = Rat(1 + int(rng() % 6), 1 + int(rng() % 4));
      prodc *= Poly::x() + Poly(wc[e.id]);
      wprod *= wc[e.id];
    }
    expect(potts_dc(c, wc) == prodc + (Poly::x() - Poly(1)) * wprod, "Z(cycle)");
  }
  for (int n = 2; n <= 6; ++n) {
    Multigraph t(n);
    for (int v = 1; v < n; ++v) t.add_edge(0, v);
    expect(tutte_dc(t) == BiPoly::x().pow(unsigned(n - 1)), "T(tree)");
    BiPoly cyc = BiPoly::y();
    for (int i = 1; i < n; ++i) cyc += BiPoly::x().pow(unsigned(i));
    expect(tutte_dc(cycle_graph(n)) == cyc, "T(C_n)");
  }
  expect(char_poly_subset(Matroid::uniform(1, 1)) == make_poly({-1, 1}), "C(U_{1,1})");
  expect(char_poly_subset(Matroid::uniform(2, 4)) == make_poly({3, -4, 1}), "C(U_{2,4})");
  for (int n = 3; n <= 6; ++n)
    expect(flow_poly(cycle_graph(n)) == make_poly({-1, 1}), "F(C_n)");
  expect(flow_poly(parallel_bundle(3)) == make_poly({2, -3, 1}), "F(L_3)");
  expect(flow_poly(complete_graph(4)) == make_poly({-6, 11, -6, 1}), "F(K_4)");
  for (int p = 1; p <= 6; ++p)
    expect(w_poly(complete_graph(p)) == Poly::monomial(p, Rat(factorial(unsigned(p)), 1)),
           "w(K_p)");
  expect(w_poly(path_graph(3)) == make_poly({0, 0, 2, 4}), "w(P_3)");
  expect(w_poly(empty_graph(3)) == make_poly({0, 1, 4, 1}), "w(N_3)");
  expect(w_poly(cycle_graph(4)) == Poly::monomial(2, Rat(2)) * make_poly({1, 4, 7}), "w(C_4)");
  expect(tau_poly(complete_graph(2)) == make_poly({0, 2, 1}), "tau(K_2)");
  for (int p = 1; p <= 6; ++p) expect(tau_poly(empty_graph(p)) == bell_poly(p), "tau(N_p)");
  for (int p = 1; p <= 6; ++p) {
    expect(sigma_poly(complete_graph(p)) == Poly::monomial(p, Rat(1)), "sigma(K_p)");
    expect(sigma_poly(empty_graph(p)) == bell_poly(p), "sigma(N_p)");
  }
  {
    Digraph d(4);  // the worked four-vertex example
    d.add_arc(0, 2);
    d.add_arc(1, 2);
    d.add_arc(1, 3);
    Poly strict = omega_strict_expansion(d).poly;
    Poly weak = omega_weak_expansion(d).poly;
    expect(strict == binom_shift_poly(0, 4) + Rat(3) * binom_shift_poly(1, 4) +
                         binom_shift_poly(2, 4),
           "strict worked example");
    expect(weak == binom_shift_poly(3, 4) + Rat(3) * binom_shift_poly(2, 4) +
                       binom_shift_poly(1, 4),
           "weak worked example");
    Digraph d1(3);
    d1.add_arc(0, 1);
    d1.add_arc(0, 2);
    expect(omega_strict_recursion(d1).poly ==
               binom_shift_poly(0, 2) + Rat(2) * binom_shift_poly(0, 3),
           "Omega-bar(D_1)");
  }
  out.detail = out.pass ? "all golden values exact" : why.str();
  return out;
}

// ---- criterion 3: the identity web over the connected corpus ----

Outcome criterion3() {
  Outcome out;
  RunReport t = verify_tutte(6);
  RunReport b = verify_bases(6);
  RunReport o = verify_order(4);
  long long checks = t.checks + b.checks + o.checks;
  long long fails = (long long)(t.failures.size() + b.failures.size() + o.failures.size());
  out.pass = fails == 0;
  std::ostringstream d;
  d << checks << " identity checks over the corpus";
  if (fails) {
    d << "; " << fails << " failures, first: ";
    const auto& f = !t.failures.empty()
                        ? t.failures.front()
                        : (!b.failures.empty() ? b.failures.front() : o.failures.front());
    d << f.identity << " on " << f.instance;
  }
  out.detail = d.str();
  return out;
}

// ---- criterion 4: census reproduction ----

Outcome criterion4() {
  Outcome out;
  const long long sigma_expect[] = {0, 0, 0, 0, 0, 2};
  const long long w_expect[] = {0, 1, 3, 16, 116, 1237};
  const long long tau_expect[] = {0, 0, 0, 0, 0, 0};
  const long long class_counts[] = {2, 6, 21, 112, 853, 11117};
  int jobs = worker_count();
  std::ostringstream d;
  for (int order = 3; order <= 8; ++order) {
    CensusRow row = census_builtin(order, jobs, order == 8);
    int i = order - 3;
    if (row.graphs_scanned != class_counts[i]) {
      out.pass = false;
      d << "order " << order << " generated " << row.graphs_scanned
        << " connected graphs, expected " << class_counts[i] << "; ";
      continue;
    }
    if (row.sigma_unreal != sigma_expect[i] || row.w_unreal != w_expect[i] ||
        row.tau_unreal != tau_expect[i]) {
      out.pass = false;
      d << "order " << order << " got (" << row.sigma_unreal << "," << row.w_unreal << ","
        << row.tau_unreal << ") expected (" << sigma_expect[i] << "," << w_expect[i] << ","
        << tau_expect[i] << "); ";
      continue;
    }
    if (order == 8) {
      // The survey's display transposes the inner coefficients of the first
      // witness polynomial (38x^6 + 36x^5); direct enumeration of partitions
      // into independent sets pins them as 36x^6 + 38x^5, consistent with
      // the second witness's printed shape. Both variants are re-verified by
      // the partition oracle here.
      std::multiset<std::vector<Rat>> got, expect;
      for (const std::string& g6 : row.sigma_witnesses) {
        Multigraph g = graph6_decode(g6);
        Poly s = sigma_poly(g);
        got.insert(s.coeffs());
        // the partition-into-independent-sets oracle must agree
        std::vector<uint16_t> adj(static_cast<size_t>(8), 0);
        for (const Edge& e : g.edges()) {
          adj[size_t(e.u)] |= uint16_t(1) << e.v;
          adj[size_t(e.v)] |= uint16_t(1) << e.u;
        }
        std::vector<long long> counts(9, 0);
        for_each_partition(8, [&](const SetPartition& part) {
          for (const auto& block : part.blocks)
            for (size_t i = 0; i < block.size(); ++i)
              for (size_t j = i + 1; j < block.size(); ++j)
                if (adj[size_t(block[i])] >> block[j] & 1) return;
          counts[size_t(part.size())] += 1;
        });
        for (int i = 0; i <= 8; ++i)
          if (s.coeff(i) != Rat(counts[size_t(i)])) {
            out.pass = false;
            d << "sigma witness disagrees with the partition oracle; ";
          }
      }
      expect.insert(make_poly({0, 0, 0, 1, 11, 38, 36, 11, 1}).coeffs());
      expect.insert(make_poly({0, 0, 0, 1, 10, 31, 30, 10, 1}).coeffs());
      if (got != expect) {
        out.pass = false;
        d << "order-8 sigma witnesses mismatch; ";
      }
    }
  }
  if (out.pass)
    d << "orders 3..8 reproduce the (sigma,w,tau)-unreal counts and the order-8 sigma "
         "witness polynomials, oracle-verified (one printed coefficient pair is transposed "
         "in the survey's display) ("
      << jobs << " workers)";
  out.detail = d.str();
  return out;
}

// ---- criterion 5: flow enumeration oracle and Wakelin multiplicity ----

Outcome criterion5() {
  Outcome out;
  long long checks = 0;
  std::ostringstream d;
  std::vector<Multigraph> corpus;
  for (int n = 1; n <= 7; ++n)
    for (Multigraph& g : connected_graph_stream(n)) corpus.push_back(std::move(g));
  for (int k = 2; k <= 5; ++k) corpus.push_back(parallel_bundle(k));
  {
    Multigraph c4d = cycle_graph(4);
    c4d.add_edge(0, 1);
    c4d.add_edge(2, 3);
    corpus.push_back(c4d);
    Multigraph loopy = cycle_graph(3);
    loopy.add_edge(1, 1);
    corpus.push_back(loopy);
  }
  for (const Multigraph& g : corpus) {
    if (g.num_edges() > 10 || g.num_edges() == 0) continue;
    bool has_bridge = false;
    for (const Edge& e : g.edges())
      if (g.classify_edge(e.id) == EdgeKind::Bridge) has_bridge = true;
    if (has_bridge) continue;
    Poly f = flow_poly(g);
    for (int q = 2; q <= 5; ++q) {
      ++checks;
      if (Rat(flow_count_enum(g, q), 1) != f(Rat(q))) {
        out.pass = false;
        d << "enum mismatch at q=" << q << " on n=" << g.num_vertices()
          << ",m=" << g.num_edges() << "; ";
      }
    }
    ++checks;
    if (root_multiplicity_at(f, Rat(1)) != g.block_count()) {
      out.pass = false;
      d << "wakelin mismatch on n=" << g.num_vertices() << ",m=" << g.num_edges() << "; ";
    }
  }
  if (out.pass)
    d << checks << " checks over bridgeless connected graphs with <= 10 edges, q in {2..5}";
  out.detail = d.str();
  return out;
}

// ---- criterion 6: Merino identity through K_6 ----

Outcome criterion6() {
  Outcome out;
  for (int n = 1; n <= 4; ++n) {
    IdentityReport r = merino_identity_check(n, "K_" + std::to_string(n));
    if (!r.pass) {
      out.pass = false;
      out.detail = "failed at n=" + std::to_string(n) + ": " + r.detail;
      return out;
    }
  }
  out.detail = "T_{K_{n+2}}(1,-1) = T_{K_n}(2,-1) for n in {1,2,3,4}";
  return out;
}

// ---- criterion 7 (stretch, non-gating): F(G_{16,6}) ----

Outcome criterion7() {
  Outcome out;
  double budget = 180.0;
  if (const char* env = std::getenv("POLYFORGE_STRETCH_SECONDS")) budget = std::atof(env);
  Multigraph g = generalized_petersen(16, 6);
  Poly f;
  try {
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::microseconds(int64_t(budget * 1e6));
    f = flow_poly_sweep(g, &deadline);
  } catch (const TimeoutError&) {
    out.skipped = true;
    std::ostringstream d;
    d << "F(G_{16,6}) not completed within the " << budget
      << "s budget (POLYFORGE_STRETCH_SECONDS raises it); optional, not gating";
    out.detail = d.str();
    return out;
  }
  int roots = sturm_count_interval(f, Rat(4), Rat(9, 2));
  if (roots != 2) {
    out.pass = false;
    out.detail = "expected 2 real roots in (4, 4.5], found " + std::to_string(roots);
    return out;
  }
  auto intervals = isolate_real_roots(f, Rat(1, 10000000));
  Rat t1(40252205, 10000000), t2(42331455, 10000000), tol(1, 1000000);
  bool f1 = false, f2 = false;
  for (const auto& [lo, hi] : intervals) {
    Rat mid = (lo + hi) / 2;
    Rat d1 = mid - t1;
    if (d1 < 0) d1 = -d1;
    Rat d2 = mid - t2;
    if (d2 < 0) d2 = -d2;
    f1 = f1 || d1 < tol;
    f2 = f2 || d2 < tol;
  }
  out.pass = f1 && f2;
  out.detail = out.pass
                   ? "F(G_{16,6}) has exactly two real roots in (4,4.5), isolated at "
                     "4.0252205 and 4.2331455"
                   : "roots in (4,4.5) but not at the reported locations";
  return out;
}

// ---- criterion 8: property suites ----

Outcome criterion8() {
  Outcome out;
  std::ostringstream d;
  long long checks = 0;
  std::mt19937 rng(778899);

  // rank axioms on test matroids with |E| <= 8
  {
    std::vector<Matroid> ms;
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k <= n; ++k) ms.push_back(Matroid::uniform(k, n));
    ms.push_back(Matroid::cycle_matroid(complete_graph(4)));
    ms.push_back(Matroid::cycle_matroid(cycle_graph(5)));
    ms.push_back(Matroid::cocycle_matroid(complete_graph(4)));
    ms.push_back(Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3)));
    Multigraph loopy(3);
    loopy.add_edge(0, 0);
    loopy.add_edge(0, 1);
    loopy.add_edge(1, 2);
    loopy.add_edge(1, 2);
    ms.push_back(Matroid::cycle_matroid(loopy));
    for (const Matroid& m : ms) {
      ++checks;
      if (!m.satisfies_rank_axioms()) {
        out.pass = false;
        d << "rank axiom failure; ";
      }
    }
  }
  // basis round trips
  {
    const BasisTag tags[] = {BasisTag::Power, BasisTag::Falling, BasisTag::Rising,
                             BasisTag::ShiftedBinomial};
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Rat> c;
      for (int i = 0; i <= 10; ++i) c.push_back(Rat(int(rng() % 19) - 9));
      for (BasisTag from : tags)
        for (BasisTag to : tags) {
          ++checks;
          auto round = convert_basis(convert_basis(c, from, to, 10), to, from, 10);
          std::vector<Rat> padded = c;
          padded.resize(11, Rat(0));
          if (round != padded) {
            out.pass = false;
            d << "basis round-trip failure; ";
          }
        }
    }
  }
  // ranking invariance of activities: 50 random graphs, 5 rankings each
  {
    for (int trial = 0; trial < 50; ++trial) {
      Multigraph g(1);
      do {
        int n = 2 + int(rng() % 4);
        Multigraph h(n);
        int m = 1 + int(rng() % 9);
        for (int i = 0; i < m; ++i)
          h.add_edge(int(rng() % unsigned(n)), int(rng() % unsigned(n)));
        g = h;
      } while (!g.is_connected());
      BiPoly expectp = tutte_dc(g);
      std::vector<int> ids;
      for (const Edge& e : g.edges()) ids.push_back(e.id);
      for (int rk = 0; rk < 5; ++rk) {
        std::shuffle(ids.begin(), ids.end(), rng);
        std::map<int, int> ranking;
        for (size_t i = 0; i < ids.size(); ++i) ranking[ids[i]] = int(i);
        ++checks;
        if (tutte_activities(g, ranking).poly() != expectp) {
          out.pass = false;
          d << "activity ranking variance; ";
        }
      }
    }
  }
  // three-route order agreement, exhaustive p <= 5 at k in {1..6}
  {
    for (int p = 0; p <= 5; ++p) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) pairs.push_back({i, j});
      for (uint32_t mask = 0; mask < (uint32_t(1) << pairs.size()); ++mask) {
        Digraph dg(p);
        for (size_t k = 0; k < pairs.size(); ++k)
          if (mask >> k & 1) dg.add_arc(pairs[k].first, pairs[k].second);
        Poly a = omega_strict_recursion(dg).poly;
        Poly b = omega_strict_expansion(dg).poly;
        ++checks;
        if (a != b) {
          out.pass = false;
          d << "order route mismatch; ";
          continue;
        }
        for (int k = 1; k <= 6; ++k) {
          ++checks;
          if (Rat(omega_enum(dg, k, true), 1) != b(Rat(k))) {
            out.pass = false;
            d << "order enumeration mismatch; ";
          }
        }
      }
    }
  }
  // Dong criterion biconditional, exhaustive labelled acyclic digraphs p <= 5
  {
    for (int p = 1; p <= 5; ++p) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) pairs.push_back({i, j});
      std::vector<int> state(pairs.size(), 0);
      std::function<void(size_t)> rec = [&](size_t i) {
        if (!out.pass) return;
        if (i == pairs.size()) {
          Digraph dg(p);
          for (size_t k = 0; k < pairs.size(); ++k) {
            if (state[k] == 1) dg.add_arc(pairs[k].first, pairs[k].second);
            if (state[k] == 2) dg.add_arc(pairs[k].second, pairs[k].first);
          }
          if (!dg.is_acyclic()) return;
          ++checks;
          if (!dong_criterion(dg, "exhaustive").pass) {
            out.pass = false;
            d << "dong biconditional failure at p=" << p << "; ";
          }
          return;
        }
        for (int s = 0; s < 3; ++s) {
          state[i] = s;
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
  if (out.pass) d << checks << " property checks";
  out.detail = d.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  struct Criterion {
    int number;
    const char* name;
    Outcome (*run)();
    bool gating;
  };
  const Criterion table[] = {
      {1, "Potts oracle equivalence", criterion1, true},
      {2, "paper golden values", criterion2, true},
      {3, "identity suite on the connected corpus through order 6", criterion3, true},
      {4, "sigma/w/tau-unreal census, orders 3..8", criterion4, true},
      {5, "flow enumeration oracle and Wakelin multiplicity", criterion5, true},
      {6, "Merino identity through K_6", criterion6, true},
      {7, "stretch: F(G_{16,6}) real roots (optional)", criterion7, false},
      {8, "module property suites", criterion8, true},
  };
  bool all_ok = true;
  for (const Criterion& c : table) {
    if (!wanted.empty() && !wanted.count(c.number)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double secs = seconds_since(t0);
    const char* tag = o.skipped ? "[skip]" : (o.pass ? "[PASS]" : "[FAIL]");
    std::ostringstream line;
    line << tag << " criterion " << c.number << ": " << c.name << " -- " << o.detail << " ("
         << int(secs * 1000) / 1000.0 << "s)";
    std::cout << line.str() << std::endl;
    if (c.gating && !o.skipped && !o.pass) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
