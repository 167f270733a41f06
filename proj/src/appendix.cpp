#include "halfspec/appendix.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "halfspec/linalg.hpp"

namespace halfspec {

std::string AppendixCase::to_string() const {
  std::string out = id + "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out + ")";
}

namespace {

constexpr long kParamCap = 64;

void need(bool cond, const AppendixCase& c, const std::string& what) {
  if (!cond) throw AppendixError(c.to_string() + ": " + what);
}

void need_count(const AppendixCase& c, std::size_t n) {
  need(c.params.size() == n, c, "expected " + std::to_string(n) + " parameters");
}

void need_range(const AppendixCase& c, std::size_t from) {
  for (std::size_t i = from; i < c.params.size(); ++i)
    need(c.params[i] >= 1 && c.params[i] <= kParamCap, c, "empty parts must lie in [1, 64]");
}

int as_int(long v) { return static_cast<int>(v); }

Graph k1_plus(const Graph& g) { return disjoint_union(complete_graph(1), g); }
Graph t_graph(int s, int t) { return k1_plus(complete_bipartite(s, t)); }

Graph join_with_empties(Graph g, const AppendixCase& c, std::size_t from) {
  for (std::size_t i = from; i < c.params.size(); ++i) g = join(g, empty_graph(as_int(c.params[i])));
  return g;
}

long param_order_guard(const AppendixCase& c) {
  long sum = 0;
  for (long v : c.params) {
    need(v >= 0 && v <= kParamCap, c, "parameters must lie in [0, 64]");
    sum += v;
  }
  return sum;
}

/// Ascending coefficients helper: x^e.
IntPoly x_pow(long e) { return IntPoly::monomial(1, static_cast<int>(e)); }

/// sum of s_i over params[from..]
long parts_sum(const AppendixCase& c, std::size_t from) {
  long s = 0;
  for (std::size_t i = from; i < c.params.size(); ++i) s += c.params[i];
  return s;
}

}  // namespace

Graph appendix_graph(const AppendixCase& c) {
  param_order_guard(c);
  const auto& P = c.params;
  if (c.id == "A1") {
    need_count(c, 1);
    need(P[0] >= 5, c, "n >= 5");
    return join(disjoint_union(empty_graph(2), complete_graph(2)), empty_graph(as_int(P[0] - 4)));
  }
  if (c.id == "A2") {
    need_count(c, 2);
    need(P[0] >= 1 && P[1] >= 1, c, "s, t >= 1");
    const Graph inner = join(join(empty_graph(as_int(P[0])), empty_graph(2)), complete_graph(2));
    return join(k1_plus(inner), empty_graph(as_int(P[1])));
  }
  if (c.id == "A3") {
    need_count(c, 2);
    need(P[0] >= 1 && P[1] >= 1, c, "s, t >= 1");
    return join(k1_plus(join(empty_graph(as_int(P[0])), complete_graph(3))), empty_graph(as_int(P[1])));
  }
  if (c.id == "A4") {
    need_count(c, 4);
    need(P[0] >= P[1] && P[1] >= P[2] && P[2] >= 1 && P[3] >= 1, c, "s1 >= s2 >= s3 >= 1, t >= 1");
    const int parts[] = {as_int(P[0]), as_int(P[1]), as_int(P[2])};
    return join(k1_plus(complete_multipartite(parts)), empty_graph(as_int(P[3])));
  }
  if (c.id == "A5") {
    need_count(c, 2);
    need(P[0] >= 1 && P[1] >= 1, c, "s, t >= 1");
    return join(k1_plus(join(empty_graph(as_int(P[0])), complement(path_graph(3)))), empty_graph(as_int(P[1])));
  }
  if (c.id == "A6") {
    need(P.size() >= 2, c, "expected s, t and empty parts");
    need(P[0] >= 1 && P[1] >= 1, c, "s, t >= 1");
    need_range(c, 2);
    return join_with_empties(t_graph(as_int(P[0]), as_int(P[1])), c, 2);
  }
  if (c.id == "A7") {
    if (P.empty()) return join(t_graph(2, 3), t_graph(1, 1));
    need_count(c, 1);
    Graph g = join(t_graph(2, 2), t_graph(1, 1));
    return P[0] > 0 ? join(g, empty_graph(as_int(P[0]))) : g;
  }
  if (c.id == "A8") {
    need(P.size() >= 2, c, "expected p, t and empty parts");
    need(P[1] >= 1, c, "t >= 1");
    need_range(c, 2);
    need(static_cast<long long>(3) * P[0] + P[1] + 2 + parts_sum(c, 2) <= kMaxOrder, c, "order exceeds 64");
    Graph g = t_graph(1, as_int(P[1]));
    for (long i = 0; i < P[0]; ++i) g = join(g, t_graph(1, 1));
    return join_with_empties(g, c, 2);
  }
  if (c.id == "A9") {
    need_range(c, 0);
    return join_with_empties(join(t_graph(1, 3), t_graph(1, 2)), c, 0);
  }
  if (c.id == "A10") {
    need_count(c, 1);
    need(P[0] >= 1, c, "s4 >= 1");
    return join(join(join(t_graph(1, 3), t_graph(1, 2)), t_graph(1, 1)), empty_graph(as_int(P[0])));
  }
  throw AppendixError("unknown appendix id '" + c.id + "' (A1..A10)");
}

IntPoly closed_form(const AppendixCase& c) {
  appendix_graph(c);  // validates parameters
  const auto& P = c.params;
  const IntPoly x1{1, 1};  // x + 1
  if (c.id == "A1") {
    const Integer m = P[0] - 4;
    const IntPoly cubic(std::vector<Integer>{2 * m, -4 * m, -1, 1});
    return x_pow(P[0] - 4) * x1 * cubic;
  }
  if (c.id == "A2") {
    const Integer s = P[0], t = P[1];
    const IntPoly q(std::vector<Integer>{6 * s * t, -(4 * s * t - 4 * t), -(7 * s * t + 6 * s + 5 * t),
                                         -(s * t + 5 * t + 4 * s + 4), -1, 1});
    return x_pow(P[0] + P[1] - 1) * x1 * q;
  }
  if (c.id == "A3") {
    const Integer s = P[0], t = P[1];
    const IntPoly q(std::vector<Integer>{3 * s * t, -(4 * s * t - 2 * t), -(s * t + 4 * t + 3 * s), -2, 1});
    return x_pow(P[0] + P[1] - 2) * x1 * x1 * q;
  }
  if (c.id == "A4") {
    const Integer s1 = P[0], s2 = P[1], s3 = P[2], t = P[3];
    const Integer e2 = s1 * s2 + s1 * s3 + s2 * s3;
    const Integer e3 = s1 * s2 * s3;
    const IntPoly q(std::vector<Integer>{2 * e3 * t, e2 * t - 3 * e3 * t, -2 * (e3 + e2 * t),
                                         -(e2 + (s1 + s2 + s3) * t + t), 0, 1});
    return x_pow(P[0] + P[1] + P[2] + P[3] - 4) * q;
  }
  if (c.id == "A5") {
    const Integer s = P[0], t = P[1];
    const IntPoly q(std::vector<Integer>{-s * t, 5 * s * t, -(5 * s * t - s - 2 * t), -(s * t + 3 * s + 4 * t), -1, 1});
    return x_pow(P[0] + P[1] - 2) * x1 * q;
  }
  if (c.id == "A6") {
    const Integer s = P[0], t = P[1];
    const long m = static_cast<long>(P.size()) - 2;
    // delta * prod(x + s_i) with the rational factor cleared.
    IntPoly prod{1};
    for (std::size_t i = 2; i < P.size(); ++i) prod *= IntPoly::linear_root(-P[i]);
    IntPoly first = prod;
    for (std::size_t i = 2; i < P.size(); ++i) {
      IntPoly others{1};
      for (std::size_t j = 2; j < P.size(); ++j)
        if (j != i) others *= IntPoly::linear_root(-P[j]);
      first -= others * Integer(P[i]);
    }
    const IntPoly cubic(std::vector<Integer>{-s * t, s * t, s + t + 1, 1});
    const IntPoly tail(std::vector<Integer>{s * t, -2 * s * t, -(s + t + 1)});
    return x_pow(P[0] + P[1] + parts_sum(c, 2) - m - 2) * (first * cubic + prod * tail);
  }
  throw AppendixError(c.to_string() + ": no expanded closed form; use verify_identity");
}

namespace {

using Row = std::vector<Rational>;

Rational det_of(const std::vector<Row>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) m(i, j) = rows[i][j];
  return determinant(std::move(m));
}

/// prod(x + s_i) and prod - sum s_i prod_{j != i} over params[from..].
std::pair<Rational, Rational> cleared_factor(const AppendixCase& c, std::size_t from, const Rational& x) {
  Rational prod = 1;
  for (std::size_t i = from; i < c.params.size(); ++i) prod *= x + c.params[i];
  Rational first = prod;
  for (std::size_t i = from; i < c.params.size(); ++i) {
    Rational others = 1;
    for (std::size_t j = from; j < c.params.size(); ++j)
      if (j != i) others *= x + c.params[j];
    first -= others * c.params[i];
  }
  return {prod, first};
}

Rational xpow(const Rational& x, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

/// Right-hand side of the determinant forms at x, and a bound on its degree.
struct DetForm {
  std::function<Rational(const Rational&)> eval;
  long degree_bound;
};

DetForm det_form(const AppendixCase& c) {
  const auto& P = c.params;
  if (c.id == "A7" && P.empty()) {
    static const int kA[9][9] = {
        {0, 0, 0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 1, 1, 1, 1, 1, 1},
        {0, 1, 1, 0, 0, 0, 1, 1, 1}, {0, 1, 1, 0, 0, 0, 1, 1, 1}, {0, 1, 1, 0, 0, 0, 1, 1, 1},
        {1, 1, 1, 1, 1, 1, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 0, 0, 1}, {1, 1, 1, 1, 1, 1, 0, 1, 0},
    };
    return {[](const Rational& x) -> Rational {
              std::vector<Row> rows(9, Row(9));
              for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 9; ++j) rows[i][j] = (i == j ? x : Rational(0)) - kA[i][j];
              return det_of(rows);
            },
            9};
  }
  if (c.id == "A7") {
    const Rational s3 = P[0];
    return {[s3, e = P[0] + 1](const Rational& x) -> Rational {
              const std::vector<Row> rows = {
                  {x, 0, 0, -1, -2, -s3},       {0, x, -2, -1, -2, -s3},      {0, -2, x, -1, -2, -s3},
                  {-1, -2, -2, x, 0, -s3},      {-1, -2, -2, 0, x - 1, -s3},  {-1, -2, -2, -1, -2, x},
              };
              return (x + 1) * xpow(x, e) * det_of(rows);
            },
            P[0] + 1 + 1 + 6};
  }
  if (c.id == "A8") {
    const long p = P[0], t = P[1];
    const long m = static_cast<long>(P.size()) - 2;
    const long eta = parts_sum(c, 2) - m;
    const AppendixCase cc = c;
    const long dim = p == 0 ? 4 : 6;
    return {[cc, p, t, eta](const Rational& x) -> Rational {
              const auto [prod, first] = cleared_factor(cc, 2, x);
              const Rational T = t, Pp = p;
              std::vector<Row> rows = {
                  {first, prod, prod, T * prod, prod, 2 * prod},
                  {1, x + 1, 1, T, 0, 0},
                  {1, 1, x + 1, 0, 0, 0},
                  {1, 1, 0, x + T, 0, 0},
                  {Pp, 0, 0, 0, x + 1, 2},
                  {Pp, 0, 0, 0, 1, x + 1},
              };
              Rational q;
              if (p == 0) {
                rows.resize(4);
                for (auto& r : rows) r.resize(4);
                q = det_of(rows);
              } else {
                const Rational d2 = (x + 1) * (x + 1) - 2;
                q = det_of(rows) * xpow(d2, p - 1);
              }
              return xpow(x, eta + t - 1) * xpow(x + 1, p) * q;
            },
            eta + t - 1 + p + dim + m + (p > 0 ? 2 * (p - 1) : 0)};
  }
  if (c.id == "A9") {
    const long m = static_cast<long>(P.size());
    const long xi = parts_sum(c, 0) - m;
    const AppendixCase cc = c;
    return {[cc, xi](const Rational& x) -> Rational {
              const auto [prod, first] = cleared_factor(cc, 0, x);
              const std::vector<Row> rows = {
                  {first, prod, prod, 3 * prod, prod, prod, 2 * prod},
                  {1, x + 1, 1, 3, 0, 0, 0},
                  {1, 1, x + 1, 0, 0, 0, 0},
                  {1, 1, 0, x + 3, 0, 0, 0},
                  {1, 0, 0, 0, x + 1, 1, 2},
                  {1, 0, 0, 0, 1, x + 1, 0},
                  {1, 0, 0, 0, 1, 0, x + 2},
              };
              return xpow(x, xi + 3) * det_of(rows);
            },
            xi + 3 + 7 + m};
  }
  if (c.id == "A10") {
    const Rational s4 = P[0];
    return {[s4, e = P[0] + 2](const Rational& x) -> Rational {
              const std::vector<Row> rows = {
                  {x, 0, 0, -1, -1, -2, -1, -2, -s4},       {0, x, -3, -1, -1, -2, -1, -2, -s4},
                  {0, -1, x, -1, -1, -2, -1, -2, -s4},      {-1, -1, -3, x, 0, 0, -1, -2, -s4},
                  {-1, -1, -3, 0, x, -2, -1, -2, -s4},      {-1, -1, -3, 0, -1, x, -1, -2, -s4},
                  {-1, -1, -3, -1, -1, -2, x, 0, -s4},      {-1, -1, -3, -1, -1, -2, 0, x - 1, -s4},
                  {-1, -1, -3, -1, -1, -2, -1, -2, x},
              };
              return xpow(x, e) * (x + 1) * det_of(rows);
            },
            P[0] + 2 + 1 + 9};
  }
  throw AppendixError(c.to_string() + ": no determinant form");
}

// Newton interpolation through x = 0..points-1; nothing if the form is not an
// integer polynomial of that degree.
std::optional<IntPoly> interpolate(const DetForm& f, long points) {
  std::vector<Rational> d;
  for (long i = 0; i < points; ++i) d.push_back(f.eval(Rational(i)));
  for (long k = 1; k < points; ++k)
    for (long i = points - 1; i >= k; --i) d[i] = (d[i] - d[i - 1]) / k;
  std::vector<Rational> c{d[points - 1]};
  for (long k = points - 2; k >= 0; --k) {
    // c = c * (x - k) + d[k]
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * k;
    }
    next[0] += d[k];
    c = std::move(next);
  }
  std::vector<Integer> out;
  for (const auto& q : c) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return IntPoly(std::move(out));
}

}  // namespace

IdentityResult verify_identity(const AppendixCase& c) {
  IdentityResult r;
  const Graph g = appendix_graph(c);
  r.direct = charpoly(g);
  const bool expanded = c.id == "A1" || c.id == "A2" || c.id == "A3" || c.id == "A4" || c.id == "A5" || c.id == "A6";
  if (expanded) {
    r.method = "coefficients";
    r.expected = closed_form(c);
    r.ok = r.expected == r.direct;
    if (!r.ok) {
      const int top = std::max(r.expected.degree(), r.direct.degree());
      for (int i = 0; i <= top; ++i)
        if (r.expected.coeff(i) != r.direct.coeff(i)) {
          r.detail = "coefficient of x^" + std::to_string(i) + ": closed form " + r.expected.coeff(i).get_str() +
                     ", direct " + r.direct.coeff(i).get_str();
          break;
        }
    }
    return r;
  }
  r.method = "evaluation";
  const DetForm f = det_form(c);
  if (f.degree_bound < 0) {
    r.detail = "negative exponent in the determinant form";
    return r;
  }
  const long points = std::max<long>(g.order(), f.degree_bound) + 1;
  for (long i = 0; i < points; ++i) {
    const Rational x = i;
    const Rational lhs = r.direct.eval(x);
    const Rational rhs = f.eval(x);
    if (lhs != rhs) {
      r.detail = "at x=" + std::to_string(i) + ": direct " + lhs.get_str() + ", form " + rhs.get_str();
      if (auto q = interpolate(f, points)) r.expected = std::move(*q);
      return r;
    }
  }
  r.ok = true;
  return r;
}

namespace {

void for_each_parts(int max_count, int max_part, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long lo) {
    fn(cur);
    if (static_cast<int>(cur.size()) == max_count) return;
    for (long v = lo; v <= max_part; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
}

}  // namespace

std::vector<AppendixCase> default_sweep(const std::string& id) {
  std::vector<AppendixCase> out;
  if (id == "A1") {
    for (long n = 5; n <= 20; ++n) out.push_back({id, {n}});
  } else if (id == "A2") {
    for (long s = 2; s <= 3; ++s)
      for (long t = 1; t <= 4; ++t) out.push_back({id, {s, t}});
  } else if (id == "A3" || id == "A5") {
    for (long s = 1; s <= 4; ++s)
      for (long t = 1; t <= 4; ++t) out.push_back({id, {s, t}});
  } else if (id == "A4") {
    for (long s1 = 1; s1 <= 4; ++s1)
      for (long s2 = 1; s2 <= s1; ++s2)
        for (long s3 = 1; s3 <= s2; ++s3)
          for (long t = 1; t <= 4; ++t) out.push_back({id, {s1, s2, s3, t}});
  } else if (id == "A6") {
    for (long s = 2; s <= 4; ++s)
      for (long t = 2; t <= 4; ++t)
        for_each_parts(3, 3, [&](const std::vector<long>& parts) {
          AppendixCase c{id, {s, t}};
          c.params.insert(c.params.end(), parts.begin(), parts.end());
          out.push_back(std::move(c));
        });
  } else if (id == "A7") {
    out.push_back({id, {}});
    for (long s3 = 1; s3 <= 4; ++s3) out.push_back({id, {s3}});
  } else if (id == "A8") {
    for (long p = 0; p <= 3; ++p)
      for (long t = 3; t <= 6; ++t)
        for_each_parts(3, 3, [&](const std::vector<long>& parts) {
          if (p == 0 && parts.empty()) return;
          AppendixCase c{id, {p, t}};
          c.params.insert(c.params.end(), parts.begin(), parts.end());
          out.push_back(std::move(c));
        });
  } else if (id == "A9") {
    for_each_parts(3, 3, [&](const std::vector<long>& parts) { out.push_back({id, parts}); });
  } else if (id == "A10") {
    for (long s4 = 1; s4 <= 4; ++s4) out.push_back({id, {s4}});
  } else {
    throw AppendixError("unknown appendix id '" + id + "' (A1..A10)");
  }
  return out;
}

ThresholdValue threshold_polynomial(const AppendixCase& c) {
  appendix_graph(c);
  const auto& P = c.params;
  ThresholdValue v;
  if (c.id == "A2") {
    const Integer s = P[0], t = P[1];
    v.value = Rational(68 * s * t + 4 * t - 64 * s - 17);
    v.prefactor = pow2(-(P[0] + P[1] - 1)) * make_rational(3, 2) / 32;
  } else if (c.id == "A3") {
    const Integer s = P[0], t = P[1];
    v.value = Rational(s * t - s) - make_rational(1, 4);
    v.prefactor = pow2(-(P[0] + P[1] - 2)) * make_rational(9, 4) * make_rational(3, 4);
  } else if (c.id == "A4") {
    const Integer s1 = P[0], s2 = P[1], s3 = P[2], t = P[3];
    const Integer e3 = s1 * s2 * s3;
    const Integer alpha = 16 * e3 + 4 * (s1 * s2 + s2 * s3 + s1 * s3) - 1;
    const Integer beta = 16 * e3 - 4 * (s1 + s2 + s3 + 1);
    v.value = Rational(beta * t - alpha);
    v.prefactor = pow2(-(P[0] + P[1] + P[2] + P[3] - 4)) / 32;
  } else if (c.id == "A5") {
    const Integer s = P[0], t = P[1];
    v.value = Rational(4 * s * (t - 1) - 1);
    v.prefactor = pow2(-(P[0] + P[1] - 2)) * make_rational(3, 2) / 32;
  } else {
    throw AppendixError(c.to_string() + ": threshold factors exist for A2..A5 only");
  }
  return v;
}

}  // namespace halfspec
