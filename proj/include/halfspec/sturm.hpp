#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "halfspec/poly.hpp"
#include "halfspec/rational.hpp"

namespace halfspec {

/// Sturm chain of the squarefree part of a nonzero polynomial.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  /// Distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  int variations(const Rational& x) const;

 private:
  std::vector<IntPoly> chain_;
};

/// Number of distinct real roots of p in (lo, hi].
int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi);

/**
 * Root counting with multiplicity. Keeps the chain g_0 = p,
 * g_{i+1} = gcd(g_i, g_i'); a root of multiplicity m is a root of exactly
 * g_0 .. g_{m-1}, so summing distinct counts over the chain counts with
 * multiplicity.
 */
class RootCounter {
 public:
  explicit RootCounter(const IntPoly& p);

  int degree() const { return degree_; }
  /// Roots in (lo, hi] counted with multiplicity.
  int count(const Rational& lo, const Rational& hi) const;
  /// Distinct roots in (lo, hi].
  int count_distinct(const Rational& lo, const Rational& hi) const;
  /// Multiplicity of the single distinct root in (lo, hi]; throws
  /// std::domain_error when the interval holds zero or several.
  int multiplicity(const Rational& lo, const Rational& hi) const;
  /// Every real root lies in (-bound, bound].
  const Rational& bound() const { return bound_; }

  /// Interval (lo, hi] of width <= tol holding the k-th largest root,
  /// counted with multiplicity. Requires all roots real.
  std::pair<Rational, Rational> isolate_kth_largest(int k, const Rational& tol) const;

  /// Shrinks (lo, hi] around the k-th largest root until it holds no other
  /// distinct root.
  std::pair<Rational, Rational> separate_kth_largest(int k, std::pair<Rational, Rational> iv) const;

 private:
  int degree_ = 0;
  Rational bound_;
  std::vector<SturmChain> chains_;
};

std::pair<Rational, Rational> isolate_kth_largest(const IntPoly& p, int k, const Rational& tol);

/// Multiplicity of the only distinct root of p in (lo, hi].
int root_multiplicity(const IntPoly& p, const Rational& lo, const Rational& hi);

}  // namespace halfspec
