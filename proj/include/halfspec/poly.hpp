#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "halfspec/rational.hpp"

namespace halfspec {

/**
 * Univariate polynomial with arbitrary-precision integer coefficients,
 * stored in ascending degree. The leading coefficient is nonzero unless the
 * polynomial is zero, in which case the coefficient list is empty.
 */
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> ascending);
  explicit IntPoly(std::vector<Integer> ascending);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int degree);
  /// x - r for integer r.
  static IntPoly linear_root(long r);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Integer coeff(int i) const;
  const Integer& leading() const { return coeffs_.back(); }

  IntPoly derivative() const;
  Integer content() const;
  /// Divided by its content with a positive leading coefficient.
  IntPoly primitive_part() const;

  Rational eval(const Rational& x) const;
  Integer eval(const Integer& x) const;
  /// Sign of p(x) without forming the rational value.
  int sign_at(const Rational& x) const;

  /// Dense ascending coefficient strings, for JSON.
  std::vector<std::string> coeff_strings() const;
  /// Human-readable form, e.g. "x^3 - 3x - 2".
  std::string to_string(const std::string& var = "x") const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  IntPoly pow(int e) const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Pseudo-remainder scaled by |lc(b)|^(deg a - deg b + 1), so its sign
/// agrees with the true remainder over the rationals.
IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b; throws std::domain_error if b does not divide a
/// over the integers.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (zero if both are zero).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p') made primitive; the distinct roots of p, each simple.
IntPoly squarefree_part(const IntPoly& p);

/// Multiplicity of x = r (integer) as a root of p.
int root_order_at(const IntPoly& p, long r);

}  // namespace halfspec
