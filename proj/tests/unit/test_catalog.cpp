#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "halfspec/catalog.hpp"
#include "halfspec/expr.hpp"
#include "halfspec/spectral.hpp"
#include "oracles.hpp"

using namespace halfspec;

namespace {

bool valid_embedding(const Graph& host, const Graph& pat, const Embedding& e) {
  if (static_cast<int>(e.size()) != pat.order()) return false;
  for (int i = 0; i < pat.order(); ++i) {
    if (e[i] < 0 || e[i] >= host.order()) return false;
    for (int j = 0; j < i; ++j)
      if (e[i] == e[j] || host.adjacent(e[i], e[j]) != pat.adjacent(i, j)) return false;
  }
  return true;
}

// Least embedding in the documented placement order, by exhaustive search.
std::optional<Embedding> least_embedding(const Graph& host, const Graph& pat) {
  std::vector<int> order(pat.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pat.degree(a) > pat.degree(b); });
  std::optional<std::vector<int>> best_key;
  std::optional<Embedding> best;
  Embedding e(pat.order());
  // every injective map of pattern vertices to host vertices
  auto rec = [&](auto&& self, int i, std::vector<bool>& used) -> void {
    if (i == pat.order()) {
      if (!valid_embedding(host, pat, e)) return;
      std::vector<int> key;
      for (int v : order) key.push_back(e[v]);
      if (!best_key || key < *best_key) {
        best_key = key;
        best = e;
      }
      return;
    }
    for (int v = 0; v < host.order(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      e[i] = v;
      self(self, i + 1, used);
      used[v] = false;
    }
  };
  std::vector<bool> used(host.order(), false);
  rec(rec, 0, used);
  return best;
}

}  // namespace

TEST_CASE("catalog layout") {
  const auto& cat = catalog();
  REQUIRE(cat.size() == 23);
  CHECK(cat[0].id == "P4");
  CHECK(cat[1].id == "2K2");
  CHECK(cat[2].id == "H1");
  CHECK(cat[14].id == "H13");
  CHECK(cat[15].id == "Y1");
  CHECK(cat[22].id == "Y8");
  CHECK(find_entry("H7") == &cat[8]);
  CHECK(find_entry("H14") == nullptr);
  for (const auto& e : cat) CHECK(eval_expr(parse_expr(e.expression)) == e.pattern);
}

TEST_CASE("published lambda_2 values") {
  const std::map<std::string, double> table = {
      {"H1", 0.6784},  {"H2", 0.5293},  {"H3", 0.5720},  {"H4", 0.5151},  {"H5", 0.5451},  {"H6", 0.5135},
      {"H7", 0.5022},  {"H8", 0.5010},  {"H9", 0.5030},  {"H10", 0.5368}, {"H11", 0.5730}, {"H12", 0.6818},
      {"H13", 0.5100}, {"Y1", 0.5031},  {"Y2", 0.5003},  {"Y3", 0.5065},  {"Y4", 0.5195},  {"Y5", 0.5049},
      {"Y6", 0.5152},  {"Y7", 0.5061},  {"Y8", 0.5130}};
  for (const auto& [id, value] : table) {
    CAPTURE(id);
    const CatalogEntry* e = find_entry(id);
    REQUIRE(e != nullptr);
    REQUIRE(e->table_lambda2.has_value());
    CHECK(std::abs(to_double(*e->table_lambda2) - value) < 1e-12);
    const auto iv = eigenvalue_interval(e->pattern, 2, make_rational(1, 100'000'000));
    CHECK(std::abs(to_double(iv.second) - value) <= 5e-5);
  }
}

TEST_CASE("patterns have lambda_2 >= 1/2 and all but 2K2 are connected") {
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    CHECK(is_connected(e.pattern) == (e.id != "2K2"));
    CHECK_FALSE(lambda2_less_half(e.pattern));
    const auto ev = oracle::eigenvalues(e.pattern);
    CHECK(ev[1] >= 0.5);
  }
}

TEST_CASE("induced containment agrees with brute force") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 400; ++it) {
    const Graph host = oracle::random_graph(rng, 4 + it % 6, 0.5);
    const Graph pat = oracle::random_graph(rng, 2 + it % 4, 0.5);
    const auto e = contains_induced(host, pat);
    CHECK(e.has_value() == oracle::brute_contains(host, pat));
    if (e) CHECK(valid_embedding(host, pat, *e));
  }
}

TEST_CASE("embeddings are least in placement order") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 80; ++it) {
    const Graph host = oracle::random_graph(rng, 5 + it % 3, 0.5);
    const Graph pat = oracle::random_graph(rng, 3 + it % 2, 0.5);
    CHECK(contains_induced(host, pat) == least_embedding(host, pat));
  }
}

TEST_CASE("first forbidden witness") {
  const auto w = first_forbidden_witness(path_graph(4));
  REQUIRE(w.has_value());
  CHECK(w->entry == "P4");
  CHECK(w->embedding.size() == 4);
  CHECK_FALSE(first_forbidden_witness(eval_expr(parse_expr("(E2+K2)*E3"))).has_value());
  CHECK_FALSE(first_forbidden_witness(complete_graph(6)).has_value());
  const auto c4 = first_forbidden_witness(eval_expr(parse_expr("K2+K2")));
  REQUIRE(c4.has_value());
  CHECK(c4->entry == "2K2");
  // each pattern witnesses itself, possibly through an earlier entry
  for (const auto& e : catalog()) {
    const auto self = first_forbidden_witness(e.pattern);
    REQUIRE(self.has_value());
    CHECK(find_entry(self->entry) <= &e);
  }
}
