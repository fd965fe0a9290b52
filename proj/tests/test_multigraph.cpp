#include <polyforge/graph6.hpp>
#include <polyforge/iso.hpp>
#include <polyforge/multigraph.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace polyforge;

namespace {

// BFS component count, independent of the union-find in Multigraph.
int components_bfs(const Multigraph& g, const std::vector<char>& keep) {
  int n = g.num_vertices();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (size_t i = 0; i < g.edges().size(); ++i) {
    if (!keep.empty() && !keep[i]) continue;
    adj[size_t(g.edges()[i].u)].push_back(g.edges()[i].v);
    adj[size_t(g.edges()[i].v)].push_back(g.edges()[i].u);
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[size_t(s)]) continue;
    ++c;
    std::vector<int> q{s};
    seen[size_t(s)] = 1;
    while (!q.empty()) {
      int u = q.back();
      q.pop_back();
      for (int w : adj[size_t(u)])
        if (!seen[size_t(w)]) {
          seen[size_t(w)] = 1;
          q.push_back(w);
        }
    }
  }
  return c;
}

// Oracle for the bicycle space: enumerate even edge subsets (the GF(2) cycle
// space) and count the self-orthogonal intersection directly.
int bicycle_dim_oracle(const Multigraph& g) {
  int m = g.num_edges();
  REQUIRE(m <= 16);
  std::vector<uint32_t> even;
  for (uint32_t s = 0; s < (uint32_t(1) << m); ++s) {
    std::vector<int> deg(size_t(g.num_vertices()), 0);
    for (int i = 0; i < m; ++i)
      if (s >> i & 1) {
        const Edge& e = g.edges()[size_t(i)];
        if (e.u != e.v) {
          ++deg[size_t(e.u)];
          ++deg[size_t(e.v)];
        }
      }
    bool ok = true;
    for (int d : deg) ok = ok && (d % 2 == 0);
    if (ok) even.push_back(s);
  }
  int count = 0;
  for (uint32_t x : even) {
    bool orth = true;
    for (uint32_t y : even)
      if (__builtin_popcount(x & y) & 1) {
        orth = false;
        break;
      }
    if (orth) ++count;
  }
  int dim = 0;
  while ((1 << dim) < count) ++dim;
  REQUIRE((1 << dim) == count);
  return dim;
}

}  // namespace

TEST_CASE("deletion") {
  Multigraph k2 = complete_graph(2);
  Multigraph n2 = k2.delete_edge(0);
  CHECK(n2.num_vertices() == 2);
  CHECK(n2.num_edges() == 0);

  Multigraph c3 = cycle_graph(3);
  CHECK(is_isomorphic(c3.delete_edge(1), path_graph(3)));

  Multigraph dbl(2);
  int e0 = dbl.add_edge(0, 1);
  dbl.add_edge(0, 1);
  Multigraph single = dbl.delete_edge(e0);
  CHECK(single.num_edges() == 1);
  CHECK_FALSE(single.has_edge_id(e0));
  CHECK_THROWS_AS(single.delete_edge(e0), std::invalid_argument);
}

TEST_CASE("multi contraction keeps parallels as loops and preserves ids") {
  Multigraph dbl(2);
  int e0 = dbl.add_edge(0, 1);
  int e1 = dbl.add_edge(0, 1);
  Multigraph c = dbl.contract_edge_multi(e0);
  CHECK(c.num_vertices() == 1);
  REQUIRE(c.num_edges() == 1);
  CHECK(c.edges()[0].u == c.edges()[0].v);
  CHECK(c.edges()[0].id == e1);

  Multigraph c3 = cycle_graph(3);
  Multigraph two = c3.contract_edge_multi(c3.edges()[0].id);
  CHECK(two.num_vertices() == 2);
  CHECK(two.num_edges() == 2);
  for (const Edge& e : two.edges()) CHECK(e.u != e.v);

  CHECK(complete_graph(2).contract_edge_multi(0).num_vertices() == 1);

  // contracting a loop equals deleting it
  Multigraph lp(1);
  int l = lp.add_edge(0, 0);
  CHECK(lp.contract_edge_multi(l).num_edges() == 0);

  std::vector<int> vmap;
  Multigraph c4 = cycle_graph(4);
  c4.contract_edge_multi(c4.edges()[1].id, &vmap);  // edge 1-2
  CHECK(vmap == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("simple contraction collapses parallels") {
  Multigraph c3 = cycle_graph(3);
  CHECK(is_isomorphic(c3.contract_edge_simple(0), complete_graph(2)));
  CHECK(is_isomorphic(cycle_graph(4).contract_edge_simple(0), cycle_graph(3)));

  Multigraph star = complete_multipartite({1, 3});  // K_{1,3}
  CHECK(is_isomorphic(star.contract_edge_simple(star.edges()[0].id),
                      complete_multipartite({1, 2})));

  Multigraph lp(1);
  int l = lp.add_edge(0, 0);
  CHECK_THROWS_AS(lp.contract_edge_simple(l), std::invalid_argument);
}

TEST_CASE("edge classification") {
  Multigraph p4 = path_graph(4);
  for (const Edge& e : p4.edges()) CHECK(p4.classify_edge(e.id) == EdgeKind::Bridge);
  Multigraph c5 = cycle_graph(5);
  for (const Edge& e : c5.edges()) CHECK(c5.classify_edge(e.id) == EdgeKind::Normal);
  Multigraph lp(2);
  int l = lp.add_edge(0, 0);
  CHECK(lp.classify_edge(l) == EdgeKind::Loop);

  // c(E \ e) is c(E) or c(E)+1, and Bridge exactly in the latter case
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + int(rng() % 5);
    Multigraph g(n);
    int m = int(rng() % 8);
    for (int i = 0; i < m; ++i) g.add_edge(int(rng() % n), int(rng() % n));
    int base = g.components();
    for (const Edge& e : g.edges()) {
      int after = g.delete_edge(e.id).components();
      CHECK((after == base || after == base + 1));
      CHECK((g.classify_edge(e.id) == EdgeKind::Bridge) == (after == base + 1));
    }
  }
}

TEST_CASE("component counts match a BFS oracle") {
  CHECK(empty_graph(4).components() == 4);
  CHECK(cycle_graph(4).components() == 1);

  Multigraph c4 = cycle_graph(4);
  std::vector<char> keep{1, 0, 1, 0};  // two opposite edges
  CHECK(c4.components(keep) == 2);
  CHECK(components_bfs(c4, keep) == 2);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + int(rng() % 6);
    Multigraph g(n);
    int m = int(rng() % 9);
    for (int i = 0; i < m; ++i) g.add_edge(int(rng() % n), int(rng() % n));
    std::vector<char> mask(size_t(g.num_edges()));
    for (auto& b : mask) b = char(rng() % 2);
    CHECK(g.components(mask) == components_bfs(g, mask));
  }
}

TEST_CASE("edge-id subsets and weight survival") {
  Multigraph c4 = cycle_graph(4);
  CHECK(c4.components_of_ids({c4.edges()[0].id, c4.edges()[2].id}) == 2);
  CHECK(c4.components_of_ids({}) == 4);
  CHECK_THROWS_AS(c4.components_of_ids({99}), std::invalid_argument);

  // contraction drops exactly the contracted id; every other id survives, so
  // an id-keyed weight map stays valid across minors
  Multigraph g(3);
  int a = g.add_edge(0, 1);
  int b = g.add_edge(0, 1);
  int c = g.add_edge(1, 2);
  Multigraph h = g.contract_edge_multi(a);
  std::multiset<int> ids;
  for (const Edge& e : h.edges()) ids.insert(e.id);
  CHECK(ids == std::multiset<int>{b, c});
  CHECK(h.num_edges() == g.num_edges() - 1);
}

TEST_CASE("block decomposition") {
  // two triangles sharing one vertex
  Multigraph bow(5);
  bow.add_edge(0, 1);
  bow.add_edge(1, 2);
  bow.add_edge(2, 0);
  bow.add_edge(0, 3);
  bow.add_edge(3, 4);
  bow.add_edge(4, 0);
  CHECK(bow.block_count() == 2);

  CHECK(cycle_graph(5).block_count() == 1);
  CHECK(path_graph(4).block_count() == 3);
  CHECK(empty_graph(3).block_count() == 0);

  // blocks partition the edge set; sum of (|V(B)|-1) = |V| - c for loopless g
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + int(rng() % 6);
    Multigraph g(n);
    int m = int(rng() % 10);
    for (int i = 0; i < m; ++i) {
      int u = int(rng() % n), v = int(rng() % n);
      if (u != v) g.add_edge(u, v);
    }
    auto blks = g.blocks();
    std::set<int> ids;
    int vsum = 0;
    for (const auto& b : blks) {
      std::set<int> verts;
      for (int id : b) {
        CHECK(ids.insert(id).second);
        verts.insert(g.edge(id).u);
        verts.insert(g.edge(id).v);
      }
      vsum += int(verts.size()) - 1;
    }
    CHECK(int(ids.size()) == g.num_edges());
    CHECK(vsum == g.num_vertices() - g.components());
  }
}

TEST_CASE("bicycle dimension") {
  CHECK(path_graph(5).bicycle_dimension() == 0);
  CHECK(cycle_graph(4).bicycle_dimension() == 1);
  CHECK(cycle_graph(4).bicycle_dimension() == bicycle_dim_oracle(cycle_graph(4)));
  // K_4: the three 4-cycles are cuts as well, so dim B = 2 (and indeed
  // T_{K_4}(-1,-1) = 4 = (-2)^2).
  CHECK(complete_graph(4).bicycle_dimension() == 2);
  CHECK(complete_graph(4).bicycle_dimension() == bicycle_dim_oracle(complete_graph(4)));
  CHECK(complete_graph(5).bicycle_dimension() == bicycle_dim_oracle(complete_graph(5)));

  std::mt19937 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + int(rng() % 5);
    Multigraph g(n);
    int m = int(rng() % 8);
    for (int i = 0; i < m; ++i) g.add_edge(int(rng() % n), int(rng() % n));
    int dim = g.bicycle_dimension();
    CHECK(dim == bicycle_dim_oracle(g));
    CHECK(dim <= g.cycle_space_dimension());
    CHECK(dim <= g.num_edges() - g.cycle_space_dimension());
  }
}

TEST_CASE("generators") {
  Multigraph pet = generalized_petersen(5, 2);
  CHECK(pet.num_vertices() == 10);
  CHECK(pet.num_edges() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  CHECK(pet.is_connected());

  Multigraph wheel = join(empty_graph(1), cycle_graph(4));
  CHECK(wheel.num_vertices() == 5);
  CHECK(wheel.num_edges() == 8);

  CHECK(complement(complete_graph(5)).num_edges() == 0);
  CHECK(is_isomorphic(complement(empty_graph(4)), complete_graph(4)));

  CHECK_THROWS_AS(generalized_petersen(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(generalized_petersen(2, 1), std::invalid_argument);

  Multigraph g66 = generalized_petersen(16, 6);
  CHECK(g66.num_vertices() == 32);
  CHECK(g66.num_edges() == 48);
  for (int v = 0; v < 32; ++v) CHECK(g66.degree(v) == 3);
}

TEST_CASE("set partitions and G(P)") {
  CHECK(partitions_of(3).size() == 5);
  CHECK(partitions_of(4).size() == 15);

  Multigraph c3 = cycle_graph(3);
  SetPartition p;
  p.blocks = {{0, 1}, {2}};
  CHECK(induced_partition_graph(c3, p).num_edges() == 1);

  SetPartition whole;
  whole.blocks = {{0, 1, 2}};
  CHECK(induced_partition_graph(c3, whole).num_edges() == 3);

  SetPartition bad;
  bad.blocks = {{0, 1}};
  CHECK_THROWS_AS(induced_partition_graph(c3, bad), std::invalid_argument);

  // each partition appears exactly once
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& part : partitions_of(4)) CHECK(seen.insert(part.blocks).second);
}

TEST_CASE("connected graph stream counts") {
  CHECK(connected_graph_stream(1).size() == 1);
  CHECK(connected_graph_stream(2).size() == 1);
  CHECK(connected_graph_stream(3).size() == 2);
  CHECK(connected_graph_stream(4).size() == 6);
  CHECK(connected_graph_stream(5).size() == 21);
  CHECK(connected_graph_stream(6).size() == 112);
  CHECK_THROWS_AS(connected_graph_stream(9), std::invalid_argument);
}

TEST_CASE("isomorphism and canonical forms") {
  CHECK_FALSE(is_isomorphic(path_graph(3), cycle_graph(3)));
  CHECK(is_isomorphic(complete_multipartite({2, 2}), cycle_graph(4)));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + int(rng() % 6);
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) g.add_edge(i, j);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph h(n);
    for (const Edge& e : g.edges()) h.add_edge(perm[size_t(e.u)], perm[size_t(e.v)]);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_multigraph_key(g) == canonical_multigraph_key(h));
  }
}

TEST_CASE("graph6 round trip") {
  CHECK(is_isomorphic(graph6_decode("C~"), complete_graph(4)));
  CHECK(graph6_encode(complete_graph(4)) == "C~");

  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + int(rng() % 10);
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) g.add_edge(i, j);
    std::string enc = graph6_encode(g);
    Multigraph back = graph6_decode(enc);
    CHECK(graph6_encode(back) == enc);
    CHECK(pack_graph(back) == pack_graph(g));
  }

  CHECK_THROWS_AS(graph6_decode("C"), std::invalid_argument);  // truncated for n=4

  // edge-list round trip up to isomorphism
  Multigraph g = parse_edge_list("3 1\n0 0\n");
  CHECK(g.num_vertices() == 3);
  REQUIRE(g.num_edges() == 1);
  CHECK(g.edges()[0].u == g.edges()[0].v);
  Multigraph k2 = parse_edge_list("2 1\n0 1\n");
  CHECK(is_isomorphic(k2, complete_graph(2)));
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), std::invalid_argument);
  Multigraph pet = generalized_petersen(5, 2);
  CHECK(is_isomorphic(parse_edge_list(emit_edge_list(pet)), pet));
}
