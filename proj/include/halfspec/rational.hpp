#pragma once

#include <gmpxx.h>

#include <string>

namespace halfspec {

using Integer = mpz_class;
/// Canonical rational: mpq_class keeps gcd(num, den) = 1 and den > 0 after
/// every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "p/q" or a finite decimal such as "0.5" or "-1e-7".
Rational parse_rational(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Fixed-point rendering with the given number of decimals (truncated toward
/// negative infinity, so lower endpoints never round up).
std::string to_decimal(const Rational& q, int decimals);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// 2^e as a rational, e may be negative.
Rational pow2(long e);

}  // namespace halfspec
