#include <polyforge/flowchrom.hpp>
#include <polyforge/iso.hpp>
#include <polyforge/potts.hpp>
#include <polyforge/tutte.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace polyforge;

namespace {

WeightMap uniform_weights(const Multigraph& g, const Rat& w) {
  WeightMap m;
  for (const Edge& e : g.edges()) m[e.id] = w;
  return m;
}

WeightMap random_weights(const Multigraph& g, std::mt19937& rng) {
  WeightMap m;
  std::uniform_int_distribution<int> nu(-6, 6), de(1, 5);
  for (const Edge& e : g.edges()) m[e.id] = Rat(nu(rng), de(rng));
  return m;
}

Multigraph random_multigraph(std::mt19937& rng, int max_n, int max_m) {
  int n = 1 + int(rng() % unsigned(max_n));
  Multigraph g(n);
  int m = int(rng() % unsigned(max_m + 1));
  for (int i = 0; i < m; ++i) g.add_edge(int(rng() % unsigned(n)), int(rng() % unsigned(n)));
  return g;
}

}  // namespace

TEST_CASE("potts golden values") {
  for (int n = 1; n <= 5; ++n) {
    Multigraph nn = empty_graph(n);
    CHECK(potts_subset(nn, {}) == Poly::monomial(n, Rat(1)));
    CHECK(potts_dc(nn, {}) == Poly::monomial(n, Rat(1)));
  }

  Multigraph k2 = complete_graph(2);
  WeightMap w{{0, Rat(5, 3)}};
  // q(q + w)
  Poly expect = Poly::x() * (Poly::x() + Poly(Rat(5, 3)));
  CHECK(potts_subset(k2, w) == expect);
  CHECK(potts_dc(k2, w) == expect);

  Multigraph loop(1);
  loop.add_edge(0, 0);
  WeightMap wl{{0, Rat(7, 2)}};
  CHECK(potts_dc(loop, wl) == Poly::x() * Rat(9, 2));  // q(1 + w)
}

TEST_CASE("tree and cycle formulas") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    // random tree on 6 vertices
    Multigraph t(6);
    for (int v = 1; v < 6; ++v) t.add_edge(int(rng() % unsigned(v)), v);
    WeightMap w = random_weights(t, rng);
    Poly expect = Poly::x();
    for (const Edge& e : t.edges()) expect *= (Poly::x() + Poly(w[e.id]));
    CHECK(potts_dc(t, w) == expect);
  }
  for (int n = 2; n <= 6; ++n) {
    Multigraph c = cycle_graph(n);
    WeightMap w = random_weights(c, rng);
    Poly prod_qw = Poly::one(), prod_w = Poly::one();
    Rat wprod = 1;
    for (const Edge& e : c.edges()) {
      prod_qw *= (Poly::x() + Poly(w[e.id]));
      wprod *= w[e.id];
    }
    Poly expect = prod_qw + (Poly::x() - Poly(1)) * wprod;
    CHECK(potts_dc(c, w) == expect);
  }
}

TEST_CASE("deletion-contraction equals the subset oracle") {
  std::mt19937 rng(2025);
  // exhaustive over simple graphs up to 5 vertices
  for (int n = 1; n <= 5; ++n)
    for (const PackedGraph& p : all_graphs(n)) {
      Multigraph g = unpack_graph(p);
      if (g.num_edges() > 8) continue;
      WeightMap w = random_weights(g, rng);
      CHECK(potts_dc(g, w) == potts_subset(g, w));
    }
  // random multigraphs with loops and parallels
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = random_multigraph(rng, 5, 8);
    WeightMap w = random_weights(g, rng);
    CHECK(potts_dc(g, w) == potts_subset(g, w));
  }
}

TEST_CASE("parallel reduction identity") {
  std::mt19937 rng(7);
  Multigraph dbl(3);
  int e1 = dbl.add_edge(0, 1);
  int e2 = dbl.add_edge(0, 1);
  dbl.add_edge(1, 2);
  for (int trial = 0; trial < 10; ++trial) {
    WeightMap w = random_weights(dbl, rng);
    Multigraph single = dbl.delete_edge(e2);
    WeightMap ws;
    ws[e1] = (Rat(1) + w[e1]) * (Rat(1) + w[e2]) - 1;
    ws[dbl.edges()[2].id] = w[dbl.edges()[2].id];
    CHECK(potts_dc(dbl, w) == potts_dc(single, ws));
  }
}

TEST_CASE("uniform mode matches and has degree |V| in q") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    Multigraph g = random_multigraph(rng, 5, 7);
    BiPoly a = potts_subset_uniform(g);
    BiPoly b = potts_dc_uniform(g);
    CHECK(a == b);
    CHECK(a.x_degree() == g.num_vertices());
    CHECK(a.coeff(g.num_vertices(), 0) == Rat(1));
  }
}

TEST_CASE("numeric evaluation with series reduction") {
  std::mt19937 rng(19);
  // graphs with degree-2 vertices so the series rule actually fires
  std::vector<Multigraph> gs;
  gs.push_back(cycle_graph(5));
  {
    // K_4 with one edge subdivided
    Multigraph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    g.add_edge(4, 3);
    gs.push_back(g);
  }
  {
    Multigraph g(6);  // theta graph: three internally disjoint paths
    g.add_edge(0, 1);
    g.add_edge(1, 5);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 5);
    g.add_edge(0, 4);
    g.add_edge(4, 5);
    gs.push_back(g);
  }
  for (const Multigraph& g : gs) {
    if (g.num_edges() > 15) continue;
    for (int trial = 0; trial < 20; ++trial) {
      WeightMap w = random_weights(g, rng);
      Rat q(1 + int(rng() % 9), 1 + int(rng() % 3));
      Rat direct = potts_subset(g, w)(q);
      CHECK(potts_eval(g, q, w) == direct);
    }
  }
  // q = 0 falls back without the series prefactor division
  WeightMap w = uniform_weights(cycle_graph(4), Rat(1, 2));
  CHECK(potts_eval(cycle_graph(4), Rat(0), w) == potts_subset(cycle_graph(4), w)(Rat(0)));
}

TEST_CASE("factorization over components and blocks") {
  std::mt19937 rng(23);
  Multigraph a = cycle_graph(3), b = cycle_graph(4);
  Multigraph du = disjoint_union(a, b);
  WeightMap w = random_weights(du, rng);
  WeightMap wa, wb;
  for (int i = 0; i < 3; ++i) wa[du.edges()[size_t(i)].id] = w[du.edges()[size_t(i)].id];
  for (int i = 3; i < 7; ++i) wb[du.edges()[size_t(i)].id] = w[du.edges()[size_t(i)].id];
  Multigraph a2(3), b2(4);
  for (int i = 0; i < 3; ++i) a2.add_edge(du.edges()[size_t(i)].u, du.edges()[size_t(i)].v);
  WeightMap wa2;
  for (int i = 0; i < 3; ++i) wa2[a2.edges()[size_t(i)].id] = w[du.edges()[size_t(i)].id];
  // disjoint union multiplies
  Poly za = potts_dc(a2, wa2);
  Multigraph b3(4);
  WeightMap wb3;
  for (int i = 3; i < 7; ++i) {
    int id = b3.add_edge(du.edges()[size_t(i)].u - 3, du.edges()[size_t(i)].v - 3);
    wb3[id] = w[du.edges()[size_t(i)].id];
  }
  CHECK(potts_dc(du, w) == za * potts_dc(b3, wb3));

  // blocks: two triangles sharing a vertex, Z = q^{-1} Z(B1) Z(B2)
  Multigraph bow(5);
  bow.add_edge(0, 1);
  bow.add_edge(1, 2);
  bow.add_edge(2, 0);
  bow.add_edge(0, 3);
  bow.add_edge(3, 4);
  bow.add_edge(4, 0);
  WeightMap wbow = random_weights(bow, rng);
  Multigraph t1(3), t2(3);
  WeightMap w1, w2;
  for (int i = 0; i < 3; ++i) {
    int id = t1.add_edge(bow.edges()[size_t(i)].u % 3, bow.edges()[size_t(i)].v % 3);
    w1[id] = wbow[bow.edges()[size_t(i)].id];
  }
  t2.add_edge(0, 1);
  t2.add_edge(1, 2);
  t2.add_edge(2, 0);
  for (int i = 0; i < 3; ++i) w2[t2.edges()[size_t(i)].id] = wbow[bow.edges()[size_t(i + 3)].id];
  Poly lhs = potts_dc(bow, wbow) * Poly::x();
  Poly rhs = potts_dc(t1, w1) * potts_dc(t2, w2);
  CHECK(lhs == rhs);
}

TEST_CASE("boundary-partition sweep agrees with the subset oracle") {
  std::mt19937 rng(272727);
  for (int trial = 0; trial < 120; ++trial) {
    Multigraph g = random_multigraph(rng, 6, 9);
    Rat q(int(rng() % 11) - 5, 1 + int(rng() % 3));
    Rat y(int(rng() % 11) - 5, 1 + int(rng() % 3));
    CHECK(potts_value_sweep(g, q, y) == potts_subset_uniform(g)(q, y));
  }
  // multi-point evaluation shares one traversal
  std::vector<std::pair<Rat, Rat>> pts{{Rat(2), Rat(-2)}, {Rat(3), Rat(1, 2)}, {Rat(-1), Rat(5)}};
  Multigraph pet = generalized_petersen(5, 2);
  auto vals = potts_sweep_multi<Rat>(pet, pts);
  BiPoly z = potts_subset_uniform(pet);
  for (size_t i = 0; i < pts.size(); ++i) CHECK(vals[i] == z(pts[i].first, pts[i].second));
}

TEST_CASE("whitney rank generating function and tutte bridge") {
  CHECK(whitney_rank(complete_graph(2)) == BiPoly::x() + BiPoly::one());
  BiPoly t3 = tutte_from_potts(cycle_graph(3));
  CHECK(t3 == BiPoly::x() + BiPoly::x().pow(2) + BiPoly::y());

  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Multigraph g = random_multigraph(rng, 5, 7);
    CHECK(tutte_from_potts(g) == tutte_dc(g));
  }

  // chi(G,x) = Z_G(x, -1): uniform weight -1
  for (int n = 1; n <= 5; ++n)
    for (const PackedGraph& p : all_graphs(n)) {
      Multigraph g = unpack_graph(p);
      if (g.num_edges() > 9) continue;
      CHECK(potts_subset(g, uniform_weights(g, Rat(-1))) == chromatic_poly(g));
    }
}

TEST_CASE("independent-set polynomial") {
  VertexWeightedGraph k3(complete_graph(3), {Rat(2), Rat(3, 2), Rat(-1)});
  CHECK(independence_value(k3) == Rat(1) + Rat(2) + Rat(3, 2) + Rat(-1));

  VertexWeightedGraph p3(path_graph(3), {Rat(2), Rat(5), Rat(7)});
  // ends are vertices 0 and 2
  CHECK(independence_value(p3) == Rat(1 + 2 + 5 + 7 + 14));

  VertexWeightedGraph zero(complete_graph(4), std::vector<Rat>(4, Rat(0)));
  CHECK(independence_value(zero) == Rat(1));
}

TEST_CASE("partition function to independence polynomial") {
  std::mt19937 rng(37);
  Multigraph n3 = empty_graph(3);
  CHECK(potts_to_independence(n3, Rat(5, 2), {}, "N3").pass);

  Multigraph k2 = complete_graph(2);
  CHECK(potts_to_independence(k2, Rat(2), {{0, Rat(1)}}, "K2").pass);

  for (int trial = 0; trial < 8; ++trial) {
    Multigraph c3 = cycle_graph(3);
    CHECK(potts_to_independence(c3, Rat(3), random_weights(c3, rng), "C3").pass);
    Multigraph k4 = complete_graph(4);
    CHECK(potts_to_independence(k4, Rat(2 + int(rng() % 5)), random_weights(k4, rng), "K4").pass);
  }
  CHECK_THROWS_AS(potts_to_independence(k2, Rat(0), {{0, Rat(1)}}, "K2"),
                  std::invalid_argument);
}

TEST_CASE("fernandez-procacci condition") {
  Multigraph single(1);
  VertexWeightedGraph h(single, {Rat(-1, 4)});
  IdentityReport r = fp_condition_check(h, {Rat(1, 2)}, "single");
  CHECK(r.pass);
  CHECK(r.detail == "hypothesis-held");

  // hypothesis violated: big weight
  VertexWeightedGraph h2(single, {Rat(-10)});
  IdentityReport r2 = fp_condition_check(h2, {Rat(1, 2)}, "single-big");
  CHECK(r2.pass);
  CHECK(r2.detail.find("hypothesis-failed") == 0);

  // zero weights: hypothesis holds for any mu, all I = 1
  VertexWeightedGraph h3(cycle_graph(4), std::vector<Rat>(4, Rat(0)));
  IdentityReport r3 = fp_condition_check(h3, std::vector<Rat>(4, Rat(1)), "C4-zero");
  CHECK(r3.pass);
  CHECK(r3.detail == "hypothesis-held");

  CHECK_THROWS_AS(fp_condition_check(h3, std::vector<Rat>(4, Rat(0)), "bad"),
                  std::invalid_argument);

  // a small denser instance in regime
  VertexWeightedGraph h4(cycle_graph(5), std::vector<Rat>(5, Rat(-1, 10)));
  CHECK(fp_condition_check(h4, std::vector<Rat>(5, Rat(1, 4)), "C5").pass);
}

TEST_CASE("sign probes") {
  Multigraph k2 = complete_graph(2);
  std::vector<SignProbeSample> samples;
  samples.push_back({Rat(-1), {{0, Rat(-1, 2)}}});
  IdentityReport r = sign_probes(k2, samples, "K2");
  CHECK(r.pass);
  CHECK(r.detail.find("1 checked") == 0);

  // Jackson-Sokal regime on C_3: q = 3/4, normal edges need (1+w)^2 < 1/4
  Multigraph c3 = cycle_graph(3);
  std::vector<SignProbeSample> s2;
  WeightMap w;
  for (const Edge& e : c3.edges()) w[e.id] = Rat(-1);
  s2.push_back({Rat(3, 4), w});
  CHECK(sign_probes(c3, s2, "C3").pass);

  // out of regime: loop with weight <= -1 is skipped
  Multigraph loop(1);
  loop.add_edge(0, 0);
  std::vector<SignProbeSample> s3;
  s3.push_back({Rat(1, 2), {{0, Rat(-2)}}});
  IdentityReport r3 = sign_probes(loop, s3, "loop");
  CHECK(r3.pass);
  CHECK(r3.detail.find("0 checked, 1 skipped") == 0);

  // randomized que1 regime probes over small multigraphs
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    Multigraph g = random_multigraph(rng, 4, 6);
    WeightMap wq;
    for (const Edge& e : g.edges()) wq[e.id] = Rat(-1 - int(rng() % 2), 3 + int(rng() % 3));
    std::vector<SignProbeSample> sx;
    sx.push_back({Rat(-int(rng() % 5) - 1, 1 + int(rng() % 3)), wq});
    CHECK(sign_probes(g, sx, "random").pass);
  }
}
