#include <doctest.h>

#include <map>

#include "halfspec/appendix.hpp"
#include "halfspec/canonical.hpp"
#include "halfspec/expr.hpp"
#include "halfspec/families.hpp"
#include "halfspec/spectral.hpp"
#include "oracles.hpp"

using namespace halfspec;

namespace {

Graph ex(const char* text) { return eval_expr(parse_expr(text)); }

FamilyMatch fam(const char* spec) { return parse_family_spec(spec); }

bool admits(const char* spec) { return admissible(fam(spec)).ok; }

// Member is spectrally sound and classify names an isomorphic member of a
// family no later than the generating one.
void check_member(const FamilyMatch& m, const Graph& g) {
  CAPTURE(m.to_spec());
  CHECK(family_order(m) == g.order());
  CHECK(is_connected(g));
  CHECK(lambda2_less_half(g));
  const auto c = classify(g);
  REQUIRE(c.has_value());
  CHECK(c->family <= m.family);
  CHECK(canonical_key(build_family(*c)) == canonical_key(g));
}

}  // namespace

TEST_CASE("threshold quantities") {
  const AlphaBeta ab = alpha_beta(2, 1, 1);
  CHECK(ab.alpha == 51);
  CHECK(ab.beta == 12);
  CHECK(alpha_beta(1, 1, 1).beta == 0);
  CHECK(ratio_sum({1, 1, 1, 1}) == make_rational(8, 3));
  CHECK(ratio_sum({}) == 0);
  CHECK(gamma_value(0, 3, {1}) == make_rational(-31, 3));
  CHECK(delta_at_half(2, 2, {1}) == make_rational(-35, 24));
  // cubic at 1/2 with s=2, t=3 is -11/8; no parts leaves the factor at 1
  CHECK(delta_at_half(2, 3, {}) == make_rational(-23, 8));
}

TEST_CASE("boundary sharpness") {
  CHECK(admits("fam:5[s1=2,s2=1,s3=1,t=4]"));
  CHECK_FALSE(admits("fam:5[s1=2,s2=1,s3=1,t=5]"));
  CHECK(lambda2_less_half(appendix_graph({"A4", {2, 1, 1, 4}})));
  CHECK_FALSE(lambda2_less_half(appendix_graph({"A4", {2, 1, 1, 5}})));
  CHECK(admits("fam:9[parts=1:1:1:1]"));
  CHECK_FALSE(admits("fam:9[parts=1:1:1:1:1]"));
  for (long s : {2L, 3L}) {
    const Graph t1 = appendix_graph({"A2", {s, 1}});
    const Graph t2 = appendix_graph({"A2", {s, 2}});
    CHECK(classify(t1).has_value());
    CHECK_FALSE(classify(t2).has_value());
    CHECK_FALSE(lambda2_less_half(t2));
  }
  CHECK_FALSE(admits("fam:4[s=1]"));
  CHECK_FALSE(admits("fam:4[s=4]"));
  CHECK_FALSE(admits("fam:8[t=2,p=1,parts=]"));
  CHECK_FALSE(admits("fam:13[s=2,t=2,parts=]"));
}

TEST_CASE("factor shapes") {
  using K = FactorShape::Kind;
  auto shape = [](const char* e) { return recognize_factor(ex(e)); };
  CHECK(shape("E3") == FactorShape{K::Empty, 3, {}});
  CHECK(shape("E2+K2") == FactorShape{K::E2UnionK2, 0, {}});
  CHECK(shape("K1+B1,2") == FactorShape{K::K1PlusMultipartite, 0, {1, 2}});
  CHECK(shape("K1+(E2*~P3)") == FactorShape{K::K1PlusP3barJoin, 2, {}});
  CHECK_FALSE(shape("P4").has_value());
  CHECK_FALSE(shape("C5").has_value());
}

TEST_CASE("classify named members") {
  const auto m = classify(ex("(E2+K2)*E3"));
  REQUIRE(m.has_value());
  CHECK(m->to_string() == "family 1, s=3");
  const auto m8 = classify(build_family(fam("fam:8[t=3,p=0,parts=1]")));
  REQUIRE(m8.has_value());
  CHECK(m8->to_spec() == "fam:8[t=3,p=0,parts=1]");
  CHECK(m8->to_string() == "family 8, t=3, p=0, parts=[1]");
  CHECK_FALSE(classify(path_graph(4)).has_value());
  CHECK_FALSE(classify(ex("K2+K2")).has_value());
  CHECK(classify(complete_graph(2)).has_value());
}

TEST_CASE("family spec parsing") {
  const FamilyMatch m = fam("fam:7[p=1,q=2,parts=3:1]");
  CHECK(m.family == 7);
  CHECK(m.params.get("p") == 1);
  CHECK(m.params.get("q") == 2);
  CHECK(*m.params.parts == std::vector<int>{1, 3});
  CHECK(m.to_spec() == "fam:7[p=1,q=2,parts=1:3]");
  CHECK(parse_family_spec(m.to_spec()) == m);
  CHECK(fam("12").family == 12);
  CHECK_THROWS_AS(fam("fam:14"), FamilyError);
  CHECK_THROWS_AS(fam("fam:1[t=2]"), FamilyError);
  CHECK_THROWS_AS(fam("fam:1[s=x]"), FamilyError);
  CHECK_THROWS_AS(fam("fam:1"), FamilyError);
  CHECK_THROWS_AS(fam("fam:1[s=1,q=2]"), FamilyError);
  CHECK_THROWS_AS(build_family(fam("fam:5[s1=2,s2=1,s3=1,t=5]")), FamilyError);
  CHECK_THROWS_AS(build_family(fam("fam:1[s=61]")), OrderOverflow);
  CHECK(build_family(fam("fam:1[s=60]")).order() == 64);
}

TEST_CASE("classify picks the lowest family id") {
  std::map<std::string, int> first;
  std::vector<std::pair<FamilyMatch, Graph>> all;
  for (int f = 1; f <= 13; ++f)
    for (auto& mg : enumerate_family(f, 11)) {
      const std::string key = canonical_key(mg.second);
      auto [it, fresh] = first.emplace(key, f);
      if (!fresh) it->second = std::min(it->second, f);
      all.push_back(std::move(mg));
    }
  for (const auto& [m, g] : all) {
    const auto c = classify(g);
    REQUIRE(c.has_value());
    CHECK(c->family == first[canonical_key(g)]);
  }
}

TEST_CASE("enumeration order and parameters") {
  const auto f1 = enumerate_family(1, 8);
  REQUIRE(f1.size() == 4);
  CHECK(f1[0].first.to_spec() == "fam:1[s=1]");
  CHECK(f1[3].first.to_spec() == "fam:1[s=4]");
  for (int f = 1; f <= 13; ++f)
    for (const auto& [m, g] : enumerate_family(f, 10)) {
      CHECK(admissible(m).ok);
      CHECK(build_family(m) == g);
      CHECK(g.order() <= 10);
    }
}

TEST_CASE("generator soundness up to order 64") {
  for (int f : {1, 2, 3, 4, 6, 10, 11, 12})
    for (const auto& [m, g] : enumerate_family(f, 64)) check_member(m, g);

  const auto f5 = enumerate_family(5, 64);
  for (std::size_t i = 0; i < f5.size(); i += 97) check_member(f5[i].first, f5[i].second);
  const auto f9 = enumerate_family(9, 64);
  for (std::size_t i = 0; i < f9.size(); i += 89) check_member(f9[i].first, f9[i].second);

  // random members of the families with free part lists
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> small(0, 4), part(1, 12), count(0, 5);
  int tried = 0;
  for (int it = 0; it < 3000 && tried < 150; ++it) {
    const int f = std::array{7, 8, 13}[it % 3];
    FamilyMatch m;
    m.family = f;
    std::vector<int> parts(count(rng));
    for (int& p : parts) p = part(rng);
    std::sort(parts.begin(), parts.end());
    if (f == 7) m.params.scalars = {{"p", small(rng)}, {"q", small(rng)}};
    if (f == 8) m.params.scalars = {{"t", 3 + small(rng) * 3}, {"p", small(rng)}};
    if (f == 13) m.params.scalars = {{"s", 2 + small(rng)}, {"t", 2 + small(rng) * 4}};
    m.params.parts = parts;
    if (!admissible(m).ok || family_order(m) > 64 || family_order(m) < 20) continue;
    ++tried;
    check_member(m, build_family(m));
  }
  CHECK(tried >= 100);
}
