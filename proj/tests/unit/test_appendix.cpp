#include <doctest.h>

#include <cmath>

#include "halfspec/appendix.hpp"
#include "halfspec/expr.hpp"
#include "halfspec/linalg.hpp"
#include "halfspec/spectral.hpp"

using namespace halfspec;

namespace {

IntPoly x_to(int e) { return IntPoly::monomial(1, e); }

double lambda2_of(const Graph& g) { return to_double(eigenvalue_interval(g, 2, make_rational(1, 1'000'000'000)).second); }

}  // namespace

TEST_CASE("closed forms of the stated examples") {
  // x^2 (x+1)(x^3 - x^2 - 8x + 4)
  CHECK(closed_form({"A1", {6}}) == x_to(2) * IntPoly{1, 1} * IntPoly{4, -8, -1, 1});
  // (x+1)^2 (x^4 - 2x^3 - 8x^2 - 2x + 3)
  CHECK(closed_form({"A3", {1, 1}}) == IntPoly{1, 1}.pow(2) * IntPoly{3, -2, -8, -2, 1});
  CHECK(closed_form({"A4", {1, 1, 1, 1}}) == IntPoly{2, 0, -8, -7, 0, 1});
  for (const char* id : {"A1", "A2", "A3", "A4", "A5", "A6"})
    for (const auto& c : default_sweep(id)) {
      CAPTURE(c.to_string());
      CHECK(closed_form(c).degree() == appendix_graph(c).order());
      CHECK(closed_form(c) == charpoly(appendix_graph(c)));
    }
}

TEST_CASE("every default sweep verifies") {
  for (const char* id : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"}) {
    const auto sweep = default_sweep(id);
    CHECK(!sweep.empty());
    for (const auto& c : sweep) {
      CAPTURE(c.to_string());
      const IdentityResult r = verify_identity(c);
      CHECK(r.ok);
      CHECK(r.detail.empty());
      CHECK(r.method == (std::string(id).size() == 2 && id[1] <= '6' ? "coefficients" : "evaluation"));
    }
  }
  CHECK(default_sweep("A1").size() == 16);
  CHECK(default_sweep("A4").size() == 80);
  CHECK_THROWS_AS(default_sweep("A11"), AppendixError);
}

TEST_CASE("determinant forms beyond the sweep") {
  CHECK(verify_identity({"A7", {0}}).ok);
  CHECK(verify_identity({"A8", {4, 3, 2}}).ok);
  CHECK(verify_identity({"A9", {1, 1, 1, 1}}).ok);
  CHECK(verify_identity({"A10", {7}}).ok);
}

TEST_CASE("root exponents match the stated powers") {
  for (const auto& c : default_sweep("A1")) CHECK(root_order_at(charpoly(appendix_graph(c)), 0) == c.params[0] - 4);
  for (const char* id : {"A3", "A5"})
    for (const auto& c : default_sweep(id))
      CHECK(root_order_at(charpoly(appendix_graph(c)), 0) == c.params[0] + c.params[1] - 2);
  for (const auto& c : default_sweep("A4")) {
    const auto& P = c.params;
    CHECK(root_order_at(charpoly(appendix_graph(c)), 0) == P[0] + P[1] + P[2] + P[3] - 4);
  }
  for (const auto& c : default_sweep("A1")) CHECK(root_order_at(charpoly(appendix_graph(c)), -1) == 1);
  for (const auto& c : default_sweep("A8")) {
    const IntPoly p = charpoly(appendix_graph(c));
    long eta = 0;
    for (std::size_t i = 2; i < c.params.size(); ++i) eta += c.params[i] - 1;
    CHECK(root_order_at(p, 0) >= eta + c.params[1] - 1);
    CHECK(root_order_at(p, -1) >= c.params[0]);
  }
  for (const auto& c : default_sweep("A10")) {
    const IntPoly p = charpoly(appendix_graph(c));
    CHECK(root_order_at(p, 0) >= c.params[0] + 2);
    CHECK(root_order_at(p, -1) >= 1);
  }
}

TEST_CASE("threshold values") {
  CHECK(threshold_polynomial({"A2", {2, 1}}).value == -5);
  CHECK(threshold_polynomial({"A2", {2, 2}}).value == 135);
  CHECK(threshold_polynomial({"A2", {3, 1}}).value == -1);
  CHECK(threshold_polynomial({"A2", {3, 2}}).value == 207);
  CHECK(threshold_polynomial({"A5", {3, 1}}).value == -1);
  CHECK(threshold_polynomial({"A3", {1, 1}}).value == make_rational(-1, 4));
  CHECK(threshold_polynomial({"A4", {2, 1, 1, 4}}).value == 12 * 4 - 51);
  for (const char* id : {"A2", "A3", "A4", "A5"})
    for (const auto& c : default_sweep(id)) {
      CAPTURE(c.to_string());
      const ThresholdValue tv = threshold_polynomial(c);
      CHECK(tv.prefactor > 0);
      const Graph g = appendix_graph(c);
      CHECK(chi_at_half(g) == tv.prefactor * tv.value);
      CHECK(lambda2_less_half(g) == (tv.value < 0));
    }
}

TEST_CASE("spot eigenvalues") {
  CHECK(std::abs(lambda2_of(appendix_graph({"A2", {2, 1}})) - 0.4968) < 1e-4);
  CHECK(std::abs(lambda2_of(appendix_graph({"A2", {3, 1}})) - 0.4996) < 1e-4);
  CHECK(std::abs(lambda2_of(appendix_graph({"A5", {1, 1}})) - 0.4897) < 1e-4);
  const Graph a7 = appendix_graph({"A7", {}});
  CHECK(std::abs(lambda2_of(a7) - 0.4974026) < 1e-6);
  CHECK(lambda2_less_half(a7));
  const Graph small = eval_expr(parse_expr("K1*(K1+K2)"));
  const auto l4 = eigenvalue_interval(small, 4, make_rational(1, 1'000'000'000));
  CHECK(std::abs(to_double(l4.second) - (-1.4812)) < 1e-4);
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(appendix_graph({"A1", {4}}), AppendixError);
  CHECK_THROWS_AS(appendix_graph({"A1", {5, 6}}), AppendixError);
  CHECK_THROWS_AS(appendix_graph({"A4", {1, 2, 1, 1}}), AppendixError);
  CHECK_THROWS_AS(appendix_graph({"A12", {1}}), AppendixError);
  CHECK_THROWS_AS(closed_form({"A8", {1, 3}}), AppendixError);
  CHECK_THROWS_AS(appendix_graph({"A1", {65}}), AppendixError);
  CHECK_THROWS_AS(appendix_graph({"A2", {30, 30}}), OrderOverflow);
  CHECK(verify_identity({"A1", {64}}).ok);
}
