#include "halfspec/spectral.hpp"

#include "halfspec/sturm.hpp"

namespace halfspec {

namespace {

const Rational& half() {
  static const Rational h = make_rational(1, 2);
  return h;
}

void require_order2(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("lambda_2 needs a graph with at least 2 vertices");
}

}  // namespace

Rational default_tolerance() { return make_rational(1, 10'000'000); }

bool lambda2_less_half(const Graph& g) {
  require_order2(g);
  return count_eigs_ge(g, half()) <= 1;
}

Rational chi_at_half(const Graph& g) { return charpoly(g).eval(half()); }

int count_eigs_ge(const Graph& g, const Rational& c) {
  const Inertia in = inertia_of_shift(g, c);
  return in.pos + in.zero;
}

std::pair<Rational, Rational> eigenvalue_interval(const Graph& g, int k, const Rational& tol) {
  return isolate_kth_largest(charpoly(g), k, tol);
}

Lambda2Report lambda2_report(const Graph& g, const Rational& tol) {
  require_order2(g);
  return lambda2_report(charpoly(g), tol);
}

Lambda2Report lambda2_report(const IntPoly& chi, const Rational& tol) {
  if (chi.degree() < 2) throw std::invalid_argument("lambda_2 needs a graph with at least 2 vertices");
  const RootCounter rc(chi);
  auto iv = rc.isolate_kth_largest(2, tol);
  const auto sep = rc.separate_kth_largest(2, iv);
  Lambda2Report r;
  r.lo = std::move(iv.first);
  r.hi = std::move(iv.second);
  r.multiplicity = rc.multiplicity(sep.first, sep.second);
  return r;
}

SpectralVerdict spectral_verdict(const Graph& g, const Rational& tol) {
  SpectralVerdict v;
  v.connected = is_connected(g);
  v.count_ge_half = count_eigs_ge(g, half());
  v.lambda2_less_half = v.count_ge_half <= 1;
  v.chi_half = chi_at_half(g);
  v.lambda2 = lambda2_report(g, tol);
  return v;
}

}  // namespace halfspec
