#include "halfspec/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "halfspec/expr.hpp"
#include "halfspec/spectral.hpp"

namespace halfspec {

namespace {

struct Source {
  const char* id;
  const char* expression;
  const char* table;
};

// H_i = X_i joined with K1; T(s,t) = K1 + B(s,t).
constexpr Source kSources[] = {
    {"P4", "P4", nullptr},
    {"2K2", "K2+K2", nullptr},
    {"H1", "(E2+K3)*K1", "0.6784"},
    {"H2", "(E2+P3)*K1", "0.5293"},
    {"H3", "(E3+K2)*K1", "0.5720"},
    {"H4", "((E2+K2)*K1)*K1", "0.5151"},
    {"H5", "((K1+C3)*K1)*K1", "0.5451"},
    {"H6", "(K1+K5)*K1", "0.5135"},
    {"H7", "(K1+(E3*E3*K2))*K1", "0.5022"},
    {"H8", "(K1+(E2*E4*K2))*K1", "0.5010"},
    {"H9", "(K1+(E2*E2*E2*K1))*K1", "0.5030"},
    {"H10", "(K1+((K1+P3)*K1))*K1", "0.5368"},
    {"H11", "(K1+((E2+K2)*K1))*K1", "0.5730"},
    {"H12", "(K1+(~B1,3*K1))*K1", "0.6818"},
    {"H13", "(K1+(~P3*K2))*K1", "0.5100"},
    {"Y1", "(K1+B1,3)*(K1+B1,2)*(K1+B1,2)", "0.5031"},
    {"Y2", "(K1+B1,3)*(K1+B1,2)*(K1+B1,1)*B1,1", "0.5003"},
    {"Y3", "(K1+B1,4)*(K1+B1,2)", "0.5065"},
    {"Y4", "(K1+B2,2)*(K1+B1,2)", "0.5195"},
    {"Y5", "(K1+B2,2)*(K1+B1,1)*K2", "0.5049"},
    {"Y6", "(K1+B2,3)*(K1+B1,1)*K1", "0.5152"},
    {"Y7", "(K1+B2,4)*(K1+B1,1)", "0.5061"},
    {"Y8", "(K1+B3,3)*(K1+B1,1)", "0.5130"},
};

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& s : kSources) {
    CatalogEntry e;
    e.id = s.id;
    e.expression = s.expression;
    e.pattern = eval_expr(parse_expr(s.expression));
    if (s.table) e.table_lambda2 = parse_rational(s.table);
    if (lambda2_less_half(e.pattern)) throw std::logic_error("catalog entry " + e.id + " has lambda_2 < 1/2");
    out.push_back(std::move(e));
  }
  return out;
}

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern) {
    order_.resize(pattern.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    map_.assign(pattern.order(), -1);
  }

  std::optional<Embedding> run() {
    if (pat_.order() > host_.order()) return std::nullopt;
    if (extend(0, 0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(int depth, VertexSet used) {
    if (depth == pat_.order()) return true;
    const int v = order_[depth];
    const int need_adj = pat_.degree(v);
    const int need_non = pat_.order() - 1 - need_adj;
    VertexSet cand = host_.vertices() & ~used;
    for (int d = 0; d < depth; ++d) {
      const int u = order_[d];
      const VertexSet r = host_.row(map_[u]);
      cand &= pat_.adjacent(u, v) ? r : ~r;
    }
    while (cand) {
      const int h = std::countr_zero(cand);
      cand &= cand - 1;
      const int deg = host_.degree(h);
      if (deg < need_adj || host_.order() - 1 - deg < need_non) continue;
      map_[v] = h;
      if (extend(depth + 1, used | (VertexSet{1} << h))) return true;
    }
    map_[v] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pat_;
  std::vector<int> order_;
  Embedding map_;
};

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
  return Matcher(host, pattern).run();
}

std::optional<ForbiddenWitness> first_forbidden_witness(const Graph& host) {
  for (const auto& e : catalog()) {
    if (e.pattern.order() > host.order()) continue;
    if (auto m = contains_induced(host, e.pattern)) return ForbiddenWitness{e.id, std::move(*m)};
  }
  return std::nullopt;
}

}  // namespace halfspec
