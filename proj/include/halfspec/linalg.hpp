#pragma once

#include <vector>

#include "halfspec/graph.hpp"
#include "halfspec/poly.hpp"
#include "halfspec/rational.hpp"

namespace halfspec {

/// det(xI - A) of the adjacency matrix, by the division-free Berkowitz
/// recurrence. Monic of degree g.order().
IntPoly charpoly(const Graph& g);

/// Dense square matrix of rationals, row-major.
struct RationalMatrix {
  int n = 0;
  std::vector<Rational> a;

  explicit RationalMatrix(int dim = 0) : n(dim), a(static_cast<std::size_t>(dim) * dim, Rational(0)) {}
  Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Exact determinant by Gaussian elimination with row swaps.
Rational determinant(RationalMatrix m);

struct Inertia {
  int neg = 0;
  int zero = 0;
  int pos = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/**
 * Eigenvalue counts of A(g) below, at and above c.
 *
 * Symmetric elimination on A - cI with symmetric swaps; when every remaining
 * diagonal entry is zero the first nonzero off-diagonal pair is used as a
 * 2x2 pivot. Small inputs run on checked 64-bit rationals and fall back to
 * GMP on overflow.
 */
Inertia inertia_of_shift(const Graph& g, const Rational& c);

/// Same elimination for an arbitrary symmetric rational matrix.
Inertia inertia(RationalMatrix m);

}  // namespace halfspec
