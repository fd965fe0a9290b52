#pragma once

#include <polyforge/basespoly.hpp>
#include <polyforge/flowchrom.hpp>
#include <polyforge/iso.hpp>
#include <polyforge/matroid.hpp>
#include <polyforge/multigraph.hpp>
#include <polyforge/orderpoly.hpp>
#include <polyforge/potts.hpp>
#include <polyforge/report.hpp>
#include <polyforge/tutte.hpp>

#include <atomic>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace polyforge {

// Aggregated result of an identity-verification run; exit-status material.
struct RunReport {
  std::string suite;
  long long checks = 0;
  std::vector<IdentityReport> failures;
  std::vector<std::string> notes;
  bool pass() const { return failures.empty(); }

  void absorb(const IdentityReport& r) {
    ++checks;
    if (!r.pass) failures.push_back(r);
  }
  void absorb(const std::vector<IdentityReport>& rs) {
    for (const auto& r : rs) absorb(r);
  }
  void require(bool ok, const std::string& what, const std::string& instance) {
    ++checks;
    if (!ok) failures.push_back({what, instance, false, "mismatch"});
  }
};

namespace detail {

inline std::vector<Multigraph> connected_corpus(int max_order) {
  std::vector<Multigraph> out;
  for (int n = 1; n <= max_order; ++n)
    for (Multigraph& g : connected_graph_stream(n)) out.push_back(std::move(g));
  return out;
}

inline WeightMap random_weight_map(const Multigraph& g, std::mt19937& rng) {
  WeightMap w;
  std::uniform_int_distribution<int> nu(-6, 6), de(1, 5);
  for (const Edge& e : g.edges()) {
    int n = nu(rng);
    if (n == 0) n = 1;
    w[e.id] = Rat(n, de(rng));
  }
  return w;
}

inline Multigraph random_multigraph(std::mt19937& rng, int max_n, int max_m) {
  int n = 1 + int(rng() % unsigned(max_n));
  Multigraph g(n);
  int m = int(rng() % unsigned(max_m + 1));
  for (int i = 0; i < m; ++i) g.add_edge(int(rng() % unsigned(n)), int(rng() % unsigned(n)));
  return g;
}

inline std::string gname(const Multigraph& g) {
  return "n=" + std::to_string(g.num_vertices()) + ",m=" + std::to_string(g.num_edges());
}

}  // namespace detail

// Criterion-1 style oracle equivalence for the Potts engine.
inline RunReport verify_potts(int random_graphs = 200, unsigned seed = 20240901) {
  RunReport rep;
  rep.suite = "potts";
  std::mt19937 rng(seed);
  for (int n = 1; n <= 5; ++n)
    for (const PackedGraph& p : all_graphs(n)) {
      Multigraph g = unpack_graph(p);
      if (g.num_edges() > 8) continue;
      for (int rep_i = 0; rep_i < 2; ++rep_i) {
        WeightMap w = detail::random_weight_map(g, rng);
        rep.require(potts_dc(g, w) == potts_subset(g, w), "potts-dc-vs-subset",
                    detail::gname(g));
      }
      rep.require(potts_dc_uniform(g) == potts_subset_uniform(g), "potts-uniform-modes",
                  detail::gname(g));
      rep.require(potts_subset(g, [&] {
                    WeightMap w;
                    for (const Edge& e : g.edges()) w[e.id] = Rat(-1);
                    return w;
                  }()) == chromatic_poly(g),
                  "potts-at-minus-one-is-chromatic", detail::gname(g));
    }
  for (int i = 0; i < random_graphs; ++i) {
    Multigraph g = detail::random_multigraph(rng, 5, 8);
    WeightMap w = detail::random_weight_map(g, rng);
    rep.require(potts_dc(g, w) == potts_subset(g, w), "potts-dc-vs-subset-random",
                detail::gname(g));
    Rat q(1 + int(rng() % 7), 1 + int(rng() % 3));
    rep.require(potts_eval(g, q, w) == potts_subset(g, w)(q), "potts-eval-vs-subset",
                detail::gname(g));
  }
  // independence bridge and FP condition on a few instances
  for (int i = 0; i < 10; ++i) {
    Multigraph g = detail::random_multigraph(rng, 5, 7);
    if (g.has_loop()) continue;
    rep.absorb(potts_to_independence(g, Rat(1 + int(rng() % 4)),
                                     detail::random_weight_map(g, rng), detail::gname(g)));
  }
  rep.notes.push_back("exhaustive simple graphs <= 5 vertices plus " +
                      std::to_string(random_graphs) + " random multigraphs");
  return rep;
}

// The Tutte identity web over the connected corpus.
inline RunReport verify_tutte(int max_order = 6) {
  RunReport rep;
  rep.suite = "tutte";
  std::mt19937 rng(424242);
  for (const Multigraph& g : detail::connected_corpus(max_order)) {
    std::string name = detail::gname(g);
    BiPoly t = tutte_dc(g);
    if (g.num_vertices() <= 8) rep.absorb(convolution_check(g, name));
    for (int v = 1; v <= 3; ++v) rep.absorb(rational_identity_check(g, Rat(v), name));
    for (int k = 1; k <= 3; ++k) rep.absorb(stanley_negative_check(g, k, name));
    rep.absorb(read_rosenstiehl_check(g, name));
    rep.absorb(coefficient_property_check(g, name));
    // duality on the cycle matroid: T_M(x,y) = T_{M*}(y,x)
    Matroid m = Matroid::cycle_matroid(g);
    BiPoly tm = tutte_subset_matroid(m);
    rep.require(tm == t, "tutte-matroid-route", name);
    BiPoly td = tutte_subset_matroid(Matroid::dual(m));
    BiPoly reflected;
    for (const auto& [k, c] : tm.terms()) reflected.add_term(k.second, k.first, c);
    rep.require(td == reflected, "tutte-duality", name);
    rep.absorb(kung_identity_check(m, name));
    rep.absorb(chromatic_product_identity_check(
        g, [](const Multigraph& h) { return chromatic_poly(h); }, name));
    rep.absorb(tutte_bivariate_chromatic_check(g, name));
    rep.require(t == tutte_from_potts(g), "tutte-potts-route", name);
    // chromatic and flow specializations
    {
      int c = g.components();
      Poly spec = t.eval_y(Rat(0)).compose(Poly(1) - Poly::x()) * Poly::monomial(c, Rat(1));
      if ((g.num_vertices() - c) % 2) spec *= Rat(-1);
      rep.require(spec == chromatic_poly(g), "chromatic-from-tutte", name);
      Poly fspec = t.eval_x(Rat(0)).compose(Poly(1) - Poly::x());
      if ((g.num_edges() - g.num_vertices() + c) % 2) fspec *= Rat(-1);
      rep.require(fspec == flow_poly(g), "flow-from-tutte", name);
    }
    // activity ranking invariance on a sample
    if (g.num_edges() <= 12 && rng() % 4 == 0) {
      std::vector<int> ids;
      for (const Edge& e : g.edges()) ids.push_back(e.id);
      for (int rk = 0; rk < 2; ++rk) {
        std::shuffle(ids.begin(), ids.end(), rng);
        std::map<int, int> ranking;
        for (size_t i = 0; i < ids.size(); ++i) ranking[ids[i]] = int(i);
        rep.require(tutte_activities(g, ranking).poly() == t, "activity-ranking-invariance",
                    name);
      }
    }
  }
  for (int n = 1; n <= 4; ++n) rep.absorb(merino_identity_check(n, "K_" + std::to_string(n)));
  rep.notes.push_back("connected corpus through order " + std::to_string(max_order));
  return rep;
}

// Flow enumeration oracle and flow-specific identities.
inline RunReport verify_flow(int max_order = 6, int max_edges = 10) {
  RunReport rep;
  rep.suite = "flow";
  for (const Multigraph& g : detail::connected_corpus(max_order)) {
    std::string name = detail::gname(g);
    if (g.num_edges() > max_edges) continue;
    Poly f = flow_poly(g);
    rep.require(f == subset_flow_expansion(g), "flow-subset-route", name);
    bool has_bridge = false;
    for (const Edge& e : g.edges())
      if (g.classify_edge(e.id) == EdgeKind::Bridge) has_bridge = true;
    if (has_bridge) {
      rep.require(f.is_zero() == (g.num_edges() > 0), "flow-bridge-vanishes", name);
      continue;
    }
    for (int q = 2; q <= 5; ++q)
      rep.require(Rat(flow_count_enum(g, q), 1) == f(Rat(q)), "flow-count-enum", name);
    if (g.num_edges() > 0) rep.absorb(wakelin_multiplicity_check(g, name));
    rep.absorb(duality_checks(g, name));
    // positivity of b_i for bridgeless connected
    if (g.num_edges() > 0) {
      auto b = flow_coefficients_alternating(f);
      bool pos = true;
      for (const Rat& v : b) pos = pos && v > 0;
      rep.require(pos, "flow-coefficient-positivity", name);
    }
  }
  // Jackson factorizations on the constructed instances
  {
    Multigraph g = cycle_graph(5);
    rep.absorb(jackson_vertex_split_check(
        g, 0, g.edges()[2].id, {g.edges()[0].id, g.edges()[1].id}, "C5-split"));
    Multigraph two(6);
    two.add_edge(0, 1);
    two.add_edge(1, 2);
    two.add_edge(2, 0);
    two.add_edge(3, 4);
    two.add_edge(4, 5);
    two.add_edge(5, 3);
    int c1 = two.add_edge(2, 3);
    int c2 = two.add_edge(0, 5);
    rep.absorb(jackson_cut_check(two, {c1, c2}, "triangles-2cut"));
    Multigraph prism(6);
    prism.add_edge(0, 1);
    prism.add_edge(1, 2);
    prism.add_edge(2, 0);
    prism.add_edge(3, 4);
    prism.add_edge(4, 5);
    prism.add_edge(5, 3);
    int d1 = prism.add_edge(0, 3);
    int d2 = prism.add_edge(1, 4);
    int d3 = prism.add_edge(2, 5);
    rep.absorb(jackson_cut_check(prism, {d1, d2, d3}, "prism-3cut"));
  }
  rep.notes.push_back("bridgeless connected corpus, q in {2..5}");
  return rep;
}

// Order polynomial identities on exhaustive digraph families.
inline RunReport verify_order(int exhaustive_p = 4) {
  RunReport rep;
  rep.suite = "order";
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p <= exhaustive_p; ++p) {
    pairs.clear();
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) pairs.push_back({i, j});
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs.size()); ++mask) {
      Digraph d(p);
      for (size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1) d.add_arc(pairs[k].first, pairs[k].second);
      std::string name = "p=" + std::to_string(p) + ",mask=" + std::to_string(mask);
      rep.absorb(reciprocity_check(d, name));
      if (p <= 4) rep.absorb(tugger_check(d, name));
      Poly a = omega_strict_recursion(d).poly;
      Poly b = omega_strict_expansion(d).poly;
      rep.require(a == b, "order-recursion-vs-expansion", name);
      for (int k = 0; k <= 6; ++k)
        rep.require(Rat(omega_enum(d, k, true), 1) == b(Rat(k)), "order-enumeration", name);
    }
  }
  rep.notes.push_back("exhaustive forward digraphs through p=" + std::to_string(exhaustive_p));
  return rep;
}

// The sigma/w/tau identity suite over the connected corpus.
inline RunReport verify_bases(int max_order = 6) {
  RunReport rep;
  rep.suite = "bases";
  for (const Multigraph& g : detail::connected_corpus(max_order))
    rep.absorb(identity_suite(g, detail::gname(g)));
  // basis round trips
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> coeff(-9, 9);
  const BasisTag tags[] = {BasisTag::Power, BasisTag::Falling, BasisTag::Rising,
                           BasisTag::ShiftedBinomial};
  for (int trial = 0; trial < 10; ++trial) {
    int p = 10;
    std::vector<Rat> c;
    for (int i = 0; i <= p; ++i) c.push_back(Rat(coeff(rng)));
    for (BasisTag from : tags)
      for (BasisTag to : tags) {
        auto round = convert_basis(convert_basis(c, from, to, p), to, from, p);
        std::vector<Rat> padded = c;
        padded.resize(size_t(p) + 1, Rat(0));
        rep.require(round == padded, "basis-round-trip", "random");
      }
  }
  rep.notes.push_back("identity suite over connected corpus through order " +
                      std::to_string(max_order));
  return rep;
}

inline RunReport verify_suite(const std::string& suite, int max_order = 6) {
  if (suite == "potts") return verify_potts();
  if (suite == "tutte") return verify_tutte(max_order);
  if (suite == "flow") return verify_flow(max_order);
  if (suite == "order") return verify_order();
  if (suite == "bases") return verify_bases(max_order);
  throw std::invalid_argument("unknown suite: " + suite);
}

inline std::vector<RunReport> verify_all(int max_order = 6) {
  std::vector<RunReport> out;
  for (const char* s : {"potts", "tutte", "flow", "order", "bases"})
    out.push_back(verify_suite(s, max_order));
  return out;
}

}  // namespace polyforge
