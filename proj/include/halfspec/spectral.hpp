#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "halfspec/graph.hpp"
#include "halfspec/linalg.hpp"
#include "halfspec/rational.hpp"

namespace halfspec {

/// Default bisection width for reported eigenvalues.
Rational default_tolerance();

/// True iff at most one eigenvalue of A(g) is >= 1/2. Needs order >= 2.
bool lambda2_less_half(const Graph& g);

/// Exact value of det(I/2 - A).
Rational chi_at_half(const Graph& g);

/// Eigenvalues >= c, with multiplicity.
int count_eigs_ge(const Graph& g, const Rational& c);

struct Lambda2Report {
  Rational lo;  // lambda_2 lies in (lo, hi]
  Rational hi;
  int multiplicity = 0;
};

/// Isolates lambda_2 to width <= tol and reports the multiplicity of that
/// eigenvalue. Needs order >= 2.
Lambda2Report lambda2_report(const Graph& g, const Rational& tol);

/// Same, from a characteristic polynomial of degree >= 2.
Lambda2Report lambda2_report(const IntPoly& chi, const Rational& tol);

/// k-th largest eigenvalue (1-based), isolated to width <= tol.
std::pair<Rational, Rational> eigenvalue_interval(const Graph& g, int k, const Rational& tol);

struct SpectralVerdict {
  bool connected = false;
  bool lambda2_less_half = false;
  int count_ge_half = 0;
  Rational chi_half;
  Lambda2Report lambda2;
};

SpectralVerdict spectral_verdict(const Graph& g, const Rational& tol);

}  // namespace halfspec
