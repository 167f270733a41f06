#include "halfspec/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <sstream>

namespace halfspec {

AlphaBeta alpha_beta(long s1, long s2, long s3) {
  const Integer a = s1, b = s2, c = s3;
  AlphaBeta r;
  r.alpha = 16 * a * b * c + 4 * (a * b + b * c + a * c) - 1;
  r.beta = 16 * a * b * c - 4 * (a + b + c + 1);
  return r;
}

Rational ratio_sum(const std::vector<int>& parts) {
  Rational sum = 0;
  for (int s : parts) sum += make_rational(2L * s, 2L * s + 1);
  return sum;
}

Rational gamma_value(long p, long t, const std::vector<int>& parts) {
  const Integer P = p, T = t;
  Rational g = Rational(4 * T * P - 10 * P - 4 * T + 1);
  g += Rational(2 * T - 5) * ratio_sum(parts);
  return g;
}

Rational delta_at_half(long s, long t, const std::vector<int>& parts) {
  const Rational x = make_rational(1, 2);
  const Rational S = s, T = t;
  Rational first = 1;
  for (int si : parts) first -= Rational(si) / (x + si);
  const Rational cubic = x * x * x + (S + T + 1) * x * x + S * T * x - S * T;
  return first * cubic - (S + T + 1) * x * x - 2 * S * T * x + S * T;
}

std::string FactorShape::to_string() const {
  auto join_parts = [&] {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s;
  };
  switch (kind) {
    case Kind::Empty: return "E(" + std::to_string(m) + ")";
    case Kind::E2UnionK2: return "E2+K2";
    case Kind::K1PlusMultipartite: return "K1+M(" + join_parts() + ")";
    case Kind::K1PlusP3barJoin: return "K1+(E" + std::to_string(m) + "*~P3)";
  }
  return {};
}

namespace {

bool is_clique_set(const Graph& g, VertexSet s) {
  VertexSet rest = s;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((g.row(v) & s) != (s & ~(VertexSet{1} << v))) return false;
  }
  return true;
}

bool is_path3_set(const Graph& g, VertexSet s) {
  if (std::popcount(s) != 3) return false;
  int edges = 0;
  VertexSet rest = s;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    edges += std::popcount(g.row(v) & s);
  }
  return edges == 4;  // each edge counted twice
}

}  // namespace

std::optional<FactorShape> recognize_factor(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const VertexSet iso = isolated_vertices(g);
  const int niso = std::popcount(iso);
  FactorShape f;
  if (niso == n) {
    f.kind = FactorShape::Kind::Empty;
    f.m = n;
    return f;
  }
  if (n == 4 && niso == 2 && g.edge_count() == 1) {
    f.kind = FactorShape::Kind::E2UnionK2;
    return f;
  }
  if (niso != 1) return std::nullopt;
  const Graph rest = complement(induced_subgraph(g, g.vertices() & ~iso));
  const auto comps = connected_components(rest);
  bool all_cliques = true;
  for (VertexSet c : comps) all_cliques = all_cliques && is_clique_set(rest, c);
  if (all_cliques) {
    f.kind = FactorShape::Kind::K1PlusMultipartite;
    for (VertexSet c : comps) f.parts.push_back(std::popcount(c));
    std::sort(f.parts.begin(), f.parts.end());
    return f;
  }
  if (comps.size() == 2) {
    for (int i = 0; i < 2; ++i) {
      if (is_path3_set(rest, comps[i]) && is_clique_set(rest, comps[1 - i])) {
        f.kind = FactorShape::Kind::K1PlusP3barJoin;
        f.m = std::popcount(comps[1 - i]);
        return f;
      }
    }
  }
  return std::nullopt;
}

long FamilyParams::get(const std::string& name) const {
  for (const auto& [k, v] : scalars)
    if (k == name) return v;
  throw FamilyError("missing parameter '" + name + "'");
}

std::string FamilyMatch::to_string() const {
  std::string out = "family " + std::to_string(family);
  for (const auto& [k, v] : params.scalars) out += ", " + k + "=" + std::to_string(v);
  if (params.parts) {
    out += ", parts=[";
    for (std::size_t i = 0; i < params.parts->size(); ++i) out += (i ? "," : "") + std::to_string((*params.parts)[i]);
    out += "]";
  }
  return out;
}

std::string FamilyMatch::to_spec() const {
  std::string out = "fam:" + std::to_string(family) + "[";
  bool first = true;
  for (const auto& [k, v] : params.scalars) {
    out += (first ? "" : ",") + k + "=" + std::to_string(v);
    first = false;
  }
  if (params.parts) {
    out += std::string(first ? "" : ",") + "parts=";
    for (std::size_t i = 0; i < params.parts->size(); ++i) out += (i ? ":" : "") + std::to_string((*params.parts)[i]);
  }
  return out + "]";
}

std::vector<std::string> family_scalar_names(int family) {
  switch (family) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 10:
    case 11: return {"s"};
    case 5: return {"s1", "s2", "s3", "t"};
    case 6: return {"t"};
    case 7: return {"p", "q"};
    case 8: return {"t", "p"};
    case 9:
    case 12: return {};
    case 13: return {"s", "t"};
    default: throw FamilyError("family id must be 1..13, got " + std::to_string(family));
  }
}

bool family_has_parts(int family) { return family == 7 || family == 8 || family == 9 || family == 13; }

namespace {

Admissibility fail(std::string reason) { return {false, std::move(reason)}; }

/// Checks names and part positivity; the family-specific rules come after.
Admissibility well_formed(const FamilyMatch& m) {
  std::vector<std::string> names;
  try {
    names = family_scalar_names(m.family);
  } catch (const FamilyError& e) {
    return fail(e.what());
  }
  if (m.params.scalars.size() != names.size()) return fail("family " + std::to_string(m.family) + " expects parameters " + [&] {
      std::string s;
      for (const auto& n : names) s += (s.empty() ? "" : ",") + n;
      if (family_has_parts(m.family)) s += s.empty() ? "parts" : ",parts";
      return s.empty() ? std::string("none") : s;
    }());
  for (std::size_t i = 0; i < names.size(); ++i)
    if (m.params.scalars[i].first != names[i]) return fail("expected parameter '" + names[i] + "'");
  if (family_has_parts(m.family) != m.params.parts.has_value())
    return fail(family_has_parts(m.family) ? "missing parts" : "family takes no parts");
  if (m.params.parts) {
    const auto& parts = *m.params.parts;
    for (int s : parts)
      if (s < 1) return fail("empty parts must be >= 1");
    if (!std::is_sorted(parts.begin(), parts.end())) return fail("parts must be ascending");
  }
  return {true, {}};
}

const std::vector<int>& parts_of(const FamilyMatch& m) { return *m.params.parts; }

}  // namespace

Admissibility admissible(const FamilyMatch& m) {
  if (auto w = well_formed(m); !w.ok) return w;
  const auto& P = m.params;
  switch (m.family) {
    case 1:
    case 2:
    case 3:
      if (P.get("s") < 1) return fail("s >= 1");
      break;
    case 4:
      if (P.get("s") < 2 || P.get("s") > 3) return fail("2 <= s <= 3");
      break;
    case 5: {
      const long s1 = P.get("s1"), s2 = P.get("s2"), s3 = P.get("s3"), t = P.get("t");
      if (!(s1 >= s2 && s2 >= s3 && s3 >= 1)) return fail("s1 >= s2 >= s3 >= 1");
      if (s1 <= 1) return fail("s1 > 1");
      if (t < 1) return fail("t >= 1");
      const AlphaBeta ab = alpha_beta(s1, s2, s3);
      if (!(ab.beta * t < ab.alpha))
        return fail("t < alpha/beta = " + ab.alpha.get_str() + "/" + ab.beta.get_str());
      break;
    }
    case 6:
      if (P.get("t") < 1) return fail("t >= 1");
      break;
    case 7: {
      const long p = P.get("p"), q = P.get("q");
      if (p < 0 || q < 0) return fail("p, q >= 0");
      if (p + q + static_cast<long>(parts_of(m).size()) < 2)
        return fail("at least two join factors (otherwise disconnected or trivial)");
      break;
    }
    case 8: {
      const long t = P.get("t"), p = P.get("p");
      if (t < 3) return fail("t >= 3");
      if (p < 0) return fail("p >= 0");
      if (p + parts_of(m).size() < 1) return fail("at least two join factors (otherwise disconnected)");
      if (!(gamma_value(p, t, parts_of(m)) < 0)) return fail("gamma(p,t) < 0");
      break;
    }
    case 9:
      if (!(ratio_sum(parts_of(m)) < 3)) return fail("sum 2s_i/(2s_i+1) < 3");
      break;
    case 10:
    case 11:
      if (P.get("s") < 0) return fail("s >= 0");
      break;
    case 12: break;
    case 13: {
      const long s = P.get("s"), t = P.get("t");
      if (s < 2 || t < 2) return fail("s, t >= 2");
      if (parts_of(m).empty()) return fail("at least one empty factor (otherwise disconnected)");
      if (!(delta_at_half(s, t, parts_of(m)) < 0)) return fail("delta(1/2, s, t, s_2..s_k) < 0");
      break;
    }
  }
  return {true, {}};
}

long long family_order(const FamilyMatch& m) {
  const auto& P = m.params;
  long long parts_sum = 0;
  if (P.parts)
    for (int s : *P.parts) parts_sum += s;
  switch (m.family) {
    case 1: return 4LL + P.get("s");
    case 2:
    case 3: return 5LL + P.get("s");
    case 4: return 6LL + P.get("s");
    case 5: return 1LL + P.get("s1") + P.get("s2") + P.get("s3") + P.get("t");
    case 6: return 4LL + P.get("t");
    case 7: return 4LL * P.get("p") + 3LL * P.get("q") + parts_sum;
    case 8: return 2LL + P.get("t") + 3LL * P.get("p") + parts_sum;
    case 9: return 9 + parts_sum;
    case 10: return 12LL + P.get("s");
    case 11: return 8LL + P.get("s");
    case 12: return 9;
    case 13: return 1LL + P.get("s") + P.get("t") + parts_sum;
  }
  throw FamilyError("family id must be 1..13");
}

namespace {

Graph k1_plus(const Graph& g) { return disjoint_union(complete_graph(1), g); }
Graph t_graph(int s, int t) { return k1_plus(complete_bipartite(s, t)); }

Graph join_all(const std::vector<Graph>& factors) {
  Graph g = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) g = join(g, factors[i]);
  return g;
}

void add_empties(std::vector<Graph>& f, const std::vector<int>& parts) {
  for (int s : parts) f.push_back(empty_graph(s));
}

}  // namespace

Graph build_family(const FamilyMatch& m) {
  if (auto a = admissible(m); !a.ok) throw FamilyError("family " + std::to_string(m.family) + ": " + a.reason);
  const long long n = family_order(m);
  if (n > kMaxOrder) throw OrderOverflow("family member has " + std::to_string(n) + " vertices; the cap is 64");
  const auto& P = m.params;
  std::vector<Graph> f;
  switch (m.family) {
    case 1:
      f = {disjoint_union(empty_graph(2), complete_graph(2)), empty_graph(static_cast<int>(P.get("s")))};
      break;
    case 2:
      f = {k1_plus(join(empty_graph(static_cast<int>(P.get("s"))), complement(path_graph(3)))), complete_graph(1)};
      break;
    case 3:
      f = {k1_plus(join(empty_graph(static_cast<int>(P.get("s"))), complete_graph(3))), complete_graph(1)};
      break;
    case 4: {
      const Graph inner = join(join(empty_graph(static_cast<int>(P.get("s"))), empty_graph(2)), complete_graph(2));
      f = {k1_plus(inner), complete_graph(1)};
      break;
    }
    case 5: {
      const int parts[] = {static_cast<int>(P.get("s1")), static_cast<int>(P.get("s2")), static_cast<int>(P.get("s3"))};
      f = {k1_plus(complete_multipartite(parts)), empty_graph(static_cast<int>(P.get("t")))};
      break;
    }
    case 6: f = {k1_plus(complete_graph(3)), empty_graph(static_cast<int>(P.get("t")))}; break;
    case 7:
      for (long i = 0; i < P.get("p"); ++i) f.push_back(t_graph(1, 2));
      for (long i = 0; i < P.get("q"); ++i) f.push_back(t_graph(1, 1));
      add_empties(f, *P.parts);
      break;
    case 8:
      f.push_back(t_graph(1, static_cast<int>(P.get("t"))));
      for (long i = 0; i < P.get("p"); ++i) f.push_back(t_graph(1, 1));
      add_empties(f, *P.parts);
      break;
    case 9:
      f = {t_graph(1, 3), t_graph(1, 2)};
      add_empties(f, *P.parts);
      break;
    case 10:
      f = {t_graph(1, 3), t_graph(1, 2), t_graph(1, 1)};
      if (P.get("s") > 0) f.push_back(empty_graph(static_cast<int>(P.get("s"))));
      break;
    case 11:
      f = {t_graph(2, 2), t_graph(1, 1)};
      if (P.get("s") > 0) f.push_back(empty_graph(static_cast<int>(P.get("s"))));
      break;
    case 12: f = {t_graph(2, 3), t_graph(1, 1)}; break;
    case 13:
      f.push_back(t_graph(static_cast<int>(P.get("s")), static_cast<int>(P.get("t"))));
      add_empties(f, *P.parts);
      break;
  }
  return join_all(f);
}

namespace {

using Kind = FactorShape::Kind;

bool is_multi(const FactorShape& f, std::initializer_list<int> parts) {
  return f.kind == Kind::K1PlusMultipartite && std::equal(f.parts.begin(), f.parts.end(), parts.begin(), parts.end());
}

FamilyMatch make(int family, std::vector<std::pair<std::string, long>> scalars,
                 std::optional<std::vector<int>> parts = std::nullopt) {
  return FamilyMatch{family, FamilyParams{std::move(scalars), std::move(parts)}};
}

/// Structural candidate for one family given the non-empty factor shapes
/// (sorted) and the empty-factor sizes (ascending).
std::optional<FamilyMatch> candidate(int family, const std::vector<FactorShape>& N, const std::vector<int>& E) {
  const auto single = [&]() -> const FactorShape* { return N.size() == 1 ? &N[0] : nullptr; };
  const FactorShape* one = single();
  const bool one_multi = one && one->kind == Kind::K1PlusMultipartite;
  switch (family) {
    case 1:
      if (one && one->kind == Kind::E2UnionK2 && E.size() == 1) return make(1, {{"s", E[0]}});
      break;
    case 2:
      if (one && one->kind == Kind::K1PlusP3barJoin && E == std::vector<int>{1}) return make(2, {{"s", one->m}});
      break;
    case 3:
      if (one_multi && one->parts.size() == 4 && one->parts[2] == 1 && E == std::vector<int>{1})
        return make(3, {{"s", one->parts[3]}});
      break;
    case 4:
      if (one_multi && one->parts.size() == 4 && one->parts[1] == 1 && one->parts[2] == 2 && E == std::vector<int>{1})
        return make(4, {{"s", one->parts[3]}});
      break;
    case 5:
      if (one_multi && one->parts.size() == 3 && E.size() == 1)
        return make(5, {{"s1", one->parts[2]}, {"s2", one->parts[1]}, {"s3", one->parts[0]}, {"t", E[0]}});
      break;
    case 6:
      if (one && is_multi(*one, {1, 1, 1}) && E.size() == 1) return make(6, {{"t", E[0]}});
      break;
    case 7: {
      long p = 0, q = 0;
      for (const auto& f : N) {
        if (is_multi(f, {1, 2}))
          ++p;
        else if (is_multi(f, {1, 1}))
          ++q;
        else
          return std::nullopt;
      }
      return make(7, {{"p", p}, {"q", q}}, E);
    }
    case 8: {
      long p = 0, t = -1;
      for (const auto& f : N) {
        if (is_multi(f, {1, 1}))
          ++p;
        else if (f.kind == Kind::K1PlusMultipartite && f.parts.size() == 2 && f.parts[0] == 1 && f.parts[1] >= 3 && t < 0)
          t = f.parts[1];
        else
          return std::nullopt;
      }
      if (t < 0) return std::nullopt;
      return make(8, {{"t", t}, {"p", p}}, E);
    }
    case 9:
      if (N.size() == 2 && is_multi(N[0], {1, 2}) && is_multi(N[1], {1, 3})) return make(9, {}, E);
      break;
    case 10:
      if (N.size() == 3 && is_multi(N[0], {1, 1}) && is_multi(N[1], {1, 2}) && is_multi(N[2], {1, 3}) && E.size() <= 1)
        return make(10, {{"s", E.empty() ? 0 : E[0]}});
      break;
    case 11:
      if (N.size() == 2 && is_multi(N[0], {1, 1}) && is_multi(N[1], {2, 2}) && E.size() <= 1)
        return make(11, {{"s", E.empty() ? 0 : E[0]}});
      break;
    case 12:
      if (N.size() == 2 && is_multi(N[0], {1, 1}) && is_multi(N[1], {2, 3}) && E.empty()) return make(12, {});
      break;
    case 13:
      if (one_multi && one->parts.size() == 2 && one->parts[0] >= 2) return make(13, {{"s", one->parts[0]}, {"t", one->parts[1]}}, E);
      break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilyMatch> classify(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  const JoinDecomposition d = complement_components(g);
  std::vector<FactorShape> N;
  std::vector<int> E;
  for (const auto& f : d.factors) {
    auto shape = recognize_factor(f);
    if (!shape) return std::nullopt;
    if (shape->kind == Kind::Empty)
      E.push_back(shape->m);
    else
      N.push_back(std::move(*shape));
  }
  std::sort(N.begin(), N.end());
  std::sort(E.begin(), E.end());
  for (int family = 1; family <= 13; ++family) {
    auto c = candidate(family, N, E);
    if (c && admissible(*c).ok) return c;
  }
  return std::nullopt;
}

namespace {

/// Ascending multisets with sum <= budget, in lexicographic order.
void for_each_parts(int budget, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int lo, int left) {
    fn(cur);
    for (int v = lo; v <= left; ++v) {
      cur.push_back(v);
      rec(v, left - v);
      cur.pop_back();
    }
  };
  rec(1, budget);
}

}  // namespace

std::vector<std::pair<FamilyMatch, Graph>> enumerate_family(int family, int max_order) {
  if (max_order > kMaxOrder) throw OrderOverflow("max order is capped at 64");
  std::vector<std::pair<FamilyMatch, Graph>> out;
  auto offer = [&](FamilyMatch m) {
    if (family_order(m) > max_order || !admissible(m).ok) return;
    Graph g = build_family(m);
    out.emplace_back(std::move(m), std::move(g));
  };
  const int M = max_order;
  switch (family) {
    case 1:
    case 2:
    case 3:
    case 4:
      for (long s = 1; s <= M; ++s) offer(make(family, {{"s", s}}));
      break;
    case 5:
      for (long s1 = 2; s1 <= M; ++s1)
        for (long s2 = 1; s2 <= s1; ++s2)
          for (long s3 = 1; s3 <= s2; ++s3)
            for (long t = 1; 1 + s1 + s2 + s3 + t <= M; ++t) offer(make(5, {{"s1", s1}, {"s2", s2}, {"s3", s3}, {"t", t}}));
      break;
    case 6:
      for (long t = 1; t <= M; ++t) offer(make(6, {{"t", t}}));
      break;
    case 7:
      for (long p = 0; 4 * p <= M; ++p)
        for (long q = 0; 4 * p + 3 * q <= M; ++q)
          for_each_parts(static_cast<int>(M - 4 * p - 3 * q), [&](const std::vector<int>& parts) {
            offer(make(7, {{"p", p}, {"q", q}}, parts));
          });
      break;
    case 8:
      for (long t = 3; t + 2 <= M; ++t)
        for (long p = 0; t + 2 + 3 * p <= M; ++p)
          for_each_parts(static_cast<int>(M - t - 2 - 3 * p), [&](const std::vector<int>& parts) {
            offer(make(8, {{"t", t}, {"p", p}}, parts));
          });
      break;
    case 9:
      for_each_parts(M - 9, [&](const std::vector<int>& parts) { offer(make(9, {}, parts)); });
      break;
    case 10:
    case 11:
      for (long s = 0; s <= M; ++s) offer(make(family, {{"s", s}}));
      break;
    case 12: offer(make(12, {})); break;
    case 13:
      for (long s = 2; s <= M; ++s)
        for (long t = 2; 1 + s + t <= M; ++t)
          for_each_parts(static_cast<int>(M - 1 - s - t), [&](const std::vector<int>& parts) {
            offer(make(13, {{"s", s}, {"t", t}}, parts));
          });
      break;
    default: throw FamilyError("family id must be 1..13, got " + std::to_string(family));
  }
  return out;
}

FamilyMatch parse_family_spec(const std::string& text) {
  std::string s = text;
  if (s.rfind("fam:", 0) == 0) s = s.substr(4);
  const auto bad = [&](const std::string& why) { return FamilyError("bad family spec '" + text + "': " + why); };
  std::size_t pos = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == 0 || pos > 2) throw bad("expected a family id");
  FamilyMatch m;
  m.family = std::stoi(s.substr(0, pos));
  const auto names = family_scalar_names(m.family);
  std::vector<std::pair<std::string, std::string>> kv;
  if (pos < s.size()) {
    if (s[pos] != '[' || s.back() != ']') throw bad("expected [name=value,...]");
    std::stringstream body(s.substr(pos + 1, s.size() - pos - 2));
    std::string item;
    while (std::getline(body, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw bad("expected name=value in '" + item + "'");
      kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
  }
  const auto to_long = [&](const std::string& v) {
    if (v.empty() || v.size() > 9) throw bad("bad number '" + v + "'");
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i])) && !(i == 0 && v[i] == '-')) throw bad("bad number '" + v + "'");
    return std::stol(v);
  };
  for (const auto& name : names) {
    auto it = std::find_if(kv.begin(), kv.end(), [&](const auto& p) { return p.first == name; });
    if (it == kv.end()) throw bad("missing parameter '" + name + "'");
    m.params.scalars.emplace_back(name, to_long(it->second));
  }
  if (family_has_parts(m.family)) {
    std::vector<int> parts;
    auto it = std::find_if(kv.begin(), kv.end(), [](const auto& p) { return p.first == "parts"; });
    if (it != kv.end() && !it->second.empty()) {
      std::stringstream ps(it->second);
      std::string item;
      while (std::getline(ps, item, ':')) parts.push_back(static_cast<int>(to_long(item)));
    }
    std::sort(parts.begin(), parts.end());
    m.params.parts = std::move(parts);
  }
  for (const auto& [k, v] : kv) {
    const bool known = k == "parts" ? family_has_parts(m.family) : std::find(names.begin(), names.end(), k) != names.end();
    if (!known) throw bad("unknown parameter '" + k + "' for family " + std::to_string(m.family));
  }
  return m;
}

}  // namespace halfspec
