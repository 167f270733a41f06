#include <doctest.h>

#include <cmath>

#include "halfspec/linalg.hpp"
#include "oracles.hpp"

using namespace halfspec;

namespace {

long triangles(const Graph& g) {
  long t = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) t += std::popcount(g.row(i) & g.row(j) & ~prefix_mask(j + 1));
  return t;
}

Inertia eigen_inertia(const std::vector<double>& ev, double c) {
  Inertia in;
  for (double e : ev) {
    if (std::abs(e - c) < 1e-9)
      ++in.zero;
    else if (e < c)
      ++in.neg;
    else
      ++in.pos;
  }
  return in;
}

bool near_eigenvalue(const std::vector<double>& ev, double c) {
  for (double e : ev)
    if (std::abs(e - c) < 1e-6 && std::abs(e - c) > 1e-12) return true;
  return false;
}

}  // namespace

TEST_CASE("charpoly of small named graphs") {
  CHECK(charpoly(complete_graph(3)) == IntPoly{-2, -3, 0, 1});
  CHECK(charpoly(path_graph(4)) == IntPoly{1, 0, -3, 0, 1});
  CHECK(charpoly(empty_graph(3)) == IntPoly{0, 0, 0, 1});
  CHECK(charpoly(Graph(0)) == IntPoly{1});
  CHECK(charpoly(complete_bipartite(2, 3)) == IntPoly{0, 0, 0, -6, 0, 1});
}

TEST_CASE("charpoly equals a Bareiss determinant at n + 1 points") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 80; ++it) {
    const int n = 1 + it % 20;
    const Graph g = oracle::random_graph(rng, n, 0.3 + 0.005 * it);
    const IntPoly p = charpoly(g);
    REQUIRE(p.degree() == n);
    for (long x = -n / 2; x <= n / 2 + 1; ++x) CHECK(p.eval(Integer(x)) == oracle::charpoly_at(g, x));
  }
}

TEST_CASE("charpoly coefficients count edges and triangles") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 40; ++it) {
    const int n = 3 + it;
    const Graph g = oracle::random_graph(rng, std::min(n, 64), 0.5);
    const IntPoly p = charpoly(g);
    const int d = g.order();
    CHECK(p.coeff(d) == 1);
    CHECK(p.coeff(d - 1) == 0);
    CHECK(p.coeff(d - 2) == -g.edge_count());
    CHECK(p.coeff(d - 3) == -2 * triangles(g));
  }
}

TEST_CASE("inertia of A - cI against floating eigenvalues") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 20);
  for (int it = 0; it < 300; ++it) {
    const Graph g = oracle::random_graph(rng, 1 + it % 16, 0.45);
    const auto ev = oracle::eigenvalues(g);
    const Rational c = make_rational(num(rng), den(rng));
    if (near_eigenvalue(ev, to_double(c))) continue;
    const Inertia in = inertia_of_shift(g, c);
    CHECK(in.neg + in.zero + in.pos == g.order());
    CHECK(in == eigen_inertia(ev, to_double(c)));
  }
}

TEST_CASE("inertia detects exact eigenvalues") {
  CHECK(inertia_of_shift(complete_graph(5), Rational(-1)) == Inertia{0, 4, 1});
  CHECK(inertia_of_shift(complete_graph(5), Rational(4)) == Inertia{4, 1, 0});
  CHECK(inertia_of_shift(complete_bipartite(3, 3), Rational(0)) == Inertia{1, 4, 1});
  CHECK(inertia_of_shift(empty_graph(4), Rational(0)) == Inertia{0, 4, 0});
  // all-zero diagonal forces the 2x2 pivot
  CHECK(inertia_of_shift(path_graph(2), Rational(0)) == Inertia{1, 0, 1});
}

TEST_CASE("inertia survives the overflow fallback") {
  // shift a hair below the largest eigenvalue of K3 (2) with a huge denominator
  const Rational c = Rational(2) - Rational(1) / Rational(Integer("1000000000000000000000"));
  CHECK(inertia_of_shift(complete_graph(3), c) == Inertia{2, 0, 1});
  std::mt19937_64 rng(99);
  const Graph g = oracle::random_graph(rng, 64, 0.5);
  const auto ev = oracle::eigenvalues(g);
  const Rational c2 = make_rational(1, 3) + Rational(1) / Rational(Integer("99999999999999999989"));
  CHECK(inertia_of_shift(g, c2) == eigen_inertia(ev, to_double(c2)));
}

TEST_CASE("rational determinant and inertia of general symmetric matrices") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> v(-5, 5);
  for (int it = 0; it < 100; ++it) {
    const int n = 1 + it % 8;
    RationalMatrix m(n);
    std::vector<std::vector<Integer>> z(n, std::vector<Integer>(n));
    Eigen::MatrixXd e(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const long x = it % 3 == 0 && i == j ? 0 : v(rng);
        m(i, j) = m(j, i) = x;
        z[i][j] = z[j][i] = x;
        e(i, j) = e(j, i) = static_cast<double>(x);
      }
    CHECK(determinant(m) == Rational(oracle::bareiss_det(z)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    CHECK(inertia(m) == eigen_inertia(ev, 0.0));
  }
}
