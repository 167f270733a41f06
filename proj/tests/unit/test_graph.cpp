#include <doctest.h>

#include <numeric>
#include <set>

#include "halfspec/canonical.hpp"
#include "halfspec/expr.hpp"
#include "halfspec/graph.hpp"
#include "halfspec/graph6.hpp"
#include "halfspec/harness.hpp"
#include "oracles.hpp"

using namespace halfspec;

TEST_CASE("named graphs") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(empty_graph(4).edge_count() == 0);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  const int parts[] = {1, 2, 3};
  CHECK(complete_multipartite(parts).edge_count() == 2 + 3 + 6);
  CHECK(is_complete(complete_graph(1)));
  CHECK(is_edgeless(empty_graph(0)));
}

TEST_CASE("join, union and complement agree with their definitions") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const Graph a = oracle::random_graph(rng, 1 + it % 6, 0.4);
    const Graph b = oracle::random_graph(rng, 1 + it % 5, 0.6);
    const Graph u = disjoint_union(a, b), j = join(a, b);
    CHECK(u.edge_count() == a.edge_count() + b.edge_count());
    CHECK(j.edge_count() == a.edge_count() + b.edge_count() + a.order() * b.order());
    CHECK(j == complement(disjoint_union(complement(a), complement(b))));
    CHECK(complement(complement(a)) == a);
  }
  const int parts[] = {2, 2, 2};
  CHECK(kfold_join(3, empty_graph(2)) == complete_multipartite(parts));
  CHECK(kfold_union(3, complete_graph(2)).edge_count() == 3);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(disjoint_union(empty_graph(40), empty_graph(30)), OrderOverflow);
  CHECK_THROWS_AS(kfold_join(9, complete_graph(8)), OrderOverflow);
  CHECK(join(empty_graph(32), empty_graph(32)).order() == 64);
}

TEST_CASE("components and isolated vertices") {
  const Graph g = disjoint_union(disjoint_union(path_graph(3), empty_graph(2)), complete_graph(2));
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == 0b111);
  CHECK(comps[1] == 0b1000);
  CHECK(isolated_vertices(g) == 0b11000);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(join(empty_graph(3), empty_graph(1))));
}

TEST_CASE("induced subgraph and relabel") {
  const Graph c = cycle_graph(5);
  CHECK(induced_subgraph(c, 0b01111) == path_graph(4));
  const int perm[] = {4, 3, 2, 1, 0};
  const Graph r = relabel(path_graph(5), perm);
  CHECK(r == path_graph(5));
}

TEST_CASE("join decomposition") {
  const Graph g = join(join(disjoint_union(empty_graph(2), complete_graph(2)), empty_graph(3)), complete_graph(1));
  const auto d = complement_components(g);
  REQUIRE(d.factors.size() == 3);
  CHECK(d.factors[0] == complete_graph(1));
  CHECK(d.factors[1] == empty_graph(3));
  CHECK(d.factors[2].order() == 4);
  CHECK(rejoin(d) == g);
}

TEST_CASE("graph6 known strings") {
  // P4 0-1-2-3: bits 1,0,1,0,0,1 -> 41 + 63 = 'h'
  CHECK(graph6_encode(path_graph(4)) == "Ch");
  CHECK(graph6_encode(complete_graph(3)) == "Bw");
  CHECK(graph6_encode(complete_graph(4)) == "C~");
  CHECK(graph6_encode(empty_graph(1)) == "@");
  CHECK(graph6_decode("Ch") == path_graph(4));
  CHECK_THROWS_AS(graph6_decode("C"), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("Ch!"), Graph6Error);
}

TEST_CASE("graph6 round trip at every order") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 64; ++n) {
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const std::string s = graph6_encode(g);
    CHECK(s.size() == (n <= 62 ? 1u : 4u) + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6));
    CHECK(graph6_decode(s) == g);
  }
}

TEST_CASE("canonical key is a relabeling invariant") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const int n = 2 + it % 12;
    const Graph g = oracle::random_graph(rng, n, 0.45);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_key(g) == canonical_key(relabel(g, perm)));
  }
}

TEST_CASE("canonical keys count isomorphism classes") {
  // unlabeled graphs on n vertices: 1, 2, 4, 11, 34, 156
  const long expected[] = {0, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> keys;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < total; ++m) keys.insert(canonical_key(labeled_graph(n, m)));
    CHECK(static_cast<long>(keys.size()) == expected[n]);
  }
}

TEST_CASE("expression parsing") {
  const Graph g = eval_expr(parse_expr("(E2+K2)*E3"));
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 1 + 4 * 3);
  CHECK(eval_expr(parse_expr("3@K1")) == complete_graph(3));
  CHECK(canonical_key(eval_expr(parse_expr("~P3"))) == canonical_key(disjoint_union(complete_graph(2), complete_graph(1))));
  CHECK(eval_expr(parse_expr("B2,3")) == complete_bipartite(2, 3));
  CHECK(eval_expr(parse_expr(" K1 + K1 * K1 ")).edge_count() == 1);  // join binds tighter
  CHECK(expr_order(parse_expr("E40*E40")) == 80);
  CHECK(parse_expr("E2*K1").to_string() == "Join(E(2),K(1))");
}

TEST_CASE("expression errors") {
  try {
    parse_expr("K(3");
    FAIL("expected ExprError");
  } catch (const ExprError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(parse_expr(""), ExprError);
  CHECK_THROWS_AS(parse_expr("K3)"), ExprError);
  CHECK_THROWS_AS(parse_expr("Q3"), ExprError);
  CHECK_THROWS_AS(eval_expr(parse_expr("E40*E40")), OrderOverflow);
}
