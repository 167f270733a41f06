#include "halfspec/sturm.hpp"

#include <string>

namespace halfspec {

namespace {

/// Divides by the positive content, preserving signs.
IntPoly strip_content(const IntPoly& p) {
  if (p.is_zero()) return p;
  const Integer c = p.content();
  if (c == 1) return p;
  std::vector<Integer> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_[0].degree() < 1) return;
  chain_.push_back(strip_content(chain_[0].derivative()));
  while (true) {
    const IntPoly r = -signed_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(strip_content(r));
  }
}

int SturmChain::variations(const Rational& x) const {
  int v = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return variations(lo) - variations(hi);
}

int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi) { return SturmChain(p).count(lo, hi); }

RootCounter::RootCounter(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("root counting on the zero polynomial");
  degree_ = p.degree();
  // Cauchy bound 1 + max |a_i / a_n|.
  Integer m = 0;
  for (int i = 0; i < degree_; ++i)
    if (abs(p.coeffs()[i]) > m) m = abs(p.coeffs()[i]);
  bound_ = Rational(m, abs(p.leading())) + 1;
  bound_.canonicalize();
  IntPoly g = p;
  while (g.degree() >= 1) {
    chains_.emplace_back(g);
    g = gcd(g, g.derivative());
  }
}

int RootCounter::count(const Rational& lo, const Rational& hi) const {
  int total = 0;
  for (const auto& c : chains_) {
    const int k = c.count(lo, hi);
    if (k == 0) break;
    total += k;
  }
  return total;
}

int RootCounter::count_distinct(const Rational& lo, const Rational& hi) const {
  return chains_.empty() ? 0 : chains_[0].count(lo, hi);
}

int RootCounter::multiplicity(const Rational& lo, const Rational& hi) const {
  const int d = count_distinct(lo, hi);
  if (d != 1)
    throw std::domain_error("interval holds " + std::to_string(d) + " distinct roots, expected exactly one");
  int m = 0;
  for (const auto& c : chains_) {
    if (c.count(lo, hi) == 0) break;
    ++m;
  }
  return m;
}

std::pair<Rational, Rational> RootCounter::isolate_kth_largest(int k, const Rational& tol) const {
  if (k < 1 || k > degree_) throw std::out_of_range("root index out of range");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  Rational lo = -bound_;
  Rational hi = bound_;
  // Invariant: at least k roots above lo, fewer than k above hi.
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (count(mid, bound_) >= k)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return {lo, hi};
}

std::pair<Rational, Rational> RootCounter::separate_kth_largest(int k, std::pair<Rational, Rational> iv) const {
  auto& [lo, hi] = iv;
  while (count_distinct(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (count(mid, bound_) >= k)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return iv;
}

std::pair<Rational, Rational> isolate_kth_largest(const IntPoly& p, int k, const Rational& tol) {
  return RootCounter(p).isolate_kth_largest(k, tol);
}

int root_multiplicity(const IntPoly& p, const Rational& lo, const Rational& hi) {
  return RootCounter(p).multiplicity(lo, hi);
}

}  // namespace halfspec
