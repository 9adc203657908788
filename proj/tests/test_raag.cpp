#include <random>

#include "doctest.h"
#include "oracles/raag_oracle.hpp"
#include "tcbounds/error.hpp"
#include "tcbounds/raag.hpp"

using namespace tcb;

namespace {

SimpleGraph from_tiny(const oracle::TinyGraph& t) {
  SimpleGraph g(t.n);
  for (int a = 0; a < t.n; ++a)
    for (int b = a + 1; b < t.n; ++b)
      if (t.adj[a][b]) g.add_edge(a + 1, b + 1);
  return g;
}

void check_against_oracle(const oracle::TinyGraph& t) {
  const SimpleGraph g = from_tiny(t);
  const ZResult serial = z_number(g, Execution::Serial);
  const ZResult parallel = z_number(g, Execution::Parallel);
  const int expected = oracle::brute_force_z(t);
  REQUIRE(serial.z == expected);
  CHECK(parallel.z == serial.z);
  CHECK(parallel.witness == serial.witness);
  CHECK(parallel.disjoint_witness == serial.disjoint_witness);

  CHECK(g.is_clique(serial.witness.k1));
  CHECK(g.is_clique(serial.witness.k2));
  const auto& d = serial.disjoint_witness;
  CHECK(d.union_size == serial.z);
  CHECK(clique_pair_bound(g, d.k1, d.k2).bound == serial.z);

  CHECK(oracle::brute_force_z(t, true) == expected);
  const int omega = clique_number(g);
  CHECK(omega == oracle::brute_force_omega(t));
  CHECK(omega <= serial.z);
  CHECK(serial.z <= 2 * omega);
}

}  // namespace

TEST_SUITE_BEGIN("raag");

TEST_CASE("graph construction") {
  SimpleGraph g(4, {{1, 2}, {3, 4}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(2, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(1, 5), DomainError);
  CHECK_THROWS_AS(SimpleGraph(65), DomainError);
  CHECK(SimpleGraph::complete(64).edge_count() == 64 * 63 / 2);
}

TEST_CASE("maximal_cliques") {
  CHECK(maximal_cliques(SimpleGraph::complete(4)) == std::vector<VertexSet>{{1, 2, 3, 4}});
  CHECK(maximal_cliques(SimpleGraph::empty(3)) == std::vector<VertexSet>{{1}, {2}, {3}});
  CHECK(maximal_cliques(SimpleGraph::path(3)) == std::vector<VertexSet>{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(maximal_cliques(SimpleGraph::empty(10), 8), ResourceError);
  CHECK_THROWS_AS(maximal_cliques(SimpleGraph::empty(10), 64, 5), ResourceError);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 7;
    const auto tiny = oracle::graph_from_code(n, rng());
    CHECK(maximal_cliques(from_tiny(tiny)) == oracle::brute_force_maximal_cliques(tiny));
  }
}

TEST_CASE("z_number examples") {
  for (int n = 1; n <= 7; ++n) CHECK(z_number(SimpleGraph::complete(n)).z == n);
  CHECK(z_number(SimpleGraph::empty(1)).z == 1);
  for (int n = 2; n <= 7; ++n) CHECK(z_number(SimpleGraph::empty(n)).z == 2);
  const auto p3 = z_number(SimpleGraph::path(3));
  CHECK(p3.z == 3);
  CHECK(p3.witness == CliquePair{{1, 2}, {2, 3}, 3});
  CHECK(p3.disjoint_witness == CliquePair{{1, 2}, {3}, 3});
  CHECK_THROWS_AS(z_number(SimpleGraph(0)), DomainError);

  const auto k5 = z_number(SimpleGraph::complete(5));
  CHECK(k5.disjoint_witness == CliquePair{{1, 2, 3, 4}, {5}, 5});
}

TEST_CASE("z_number against brute force, all graphs on up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    const unsigned long long count = 1ULL << (n * (n - 1) / 2);
    for (unsigned long long code = 0; code < count; ++code)
      check_against_oracle(oracle::graph_from_code(n, code));
  }
}

TEST_CASE("z_number against brute force, random graphs on 7 vertices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) check_against_oracle(oracle::graph_from_code(7, rng()));
}

TEST_CASE("serial and parallel agree on larger graphs") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    SimpleGraph g(40);
    std::bernoulli_distribution edge(0.5);
    for (int a = 1; a <= 40; ++a)
      for (int b = a + 1; b <= 40; ++b)
        if (edge(rng)) g.add_edge(a, b);
    const auto s = z_number(g, Execution::Serial);
    const auto p = z_number(g, Execution::Parallel);
    CHECK(s.z == p.z);
    CHECK(s.witness == p.witness);
  }
}

TEST_CASE("clique_pair_bound") {
  const SimpleGraph two_edges(4, {{1, 2}, {3, 4}});
  const auto b = clique_pair_bound(two_edges, {1, 2}, {3, 4});
  CHECK(b.bound == 4);
  CHECK(b.retraction.killed == VertexSet{1, 2});
  REQUIRE(b.retraction.images.size() == 4);
  CHECK(b.retraction.images[0].empty());
  CHECK(b.retraction.images[2] == Word::generator(2, 1));
  CHECK(b.retraction.images[3] == Word::generator(2, 2));

  for (int n = 2; n <= 7; ++n) {
    VertexSet lo, hi;
    for (int v = 1; v <= n; ++v) (v <= n / 2 ? lo : hi).push_back(v);
    CHECK(clique_pair_bound(SimpleGraph::complete(n), lo, hi).bound == n);
  }
  CHECK(clique_pair_bound(SimpleGraph::empty(3), {1}, {3}).bound == 2);

  CHECK_THROWS_AS(clique_pair_bound(two_edges, {1, 3}, {4}), DomainError);
  CHECK_THROWS_AS(clique_pair_bound(two_edges, {1, 2}, {2}), DomainError);
  CHECK_THROWS_AS(clique_pair_bound(two_edges, {1, 9}, {3}), DomainError);
}

TEST_CASE("raag_presentation") {
  const auto p = raag_presentation(SimpleGraph::path(3));
  CHECK(p.rank() == 3);
  CHECK(p.relators().size() == 2);
  const auto ab = abelianization(p);
  CHECK(ab.free_rank == 3);
  CHECK(ab.torsion.empty());
}

TEST_SUITE_END();
