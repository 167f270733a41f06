#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "halfspec/graph.hpp"
#include "halfspec/poly.hpp"
#include "halfspec/rational.hpp"

namespace halfspec {

/**
 * One closed-form characteristic polynomial instance.
 *
 *   A1  {n}                 (E2+K2) * E(n-4)
 *   A2  {s, t}              (K1 + (E(s)*E2*K2)) * E(t)
 *   A3  {s, t}              (K1 + (E(s)*K3)) * E(t)
 *   A4  {s1, s2, s3, t}     (K1 + (E(s1)*E(s2)*E(s3))) * E(t)
 *   A5  {s, t}              (K1 + (E(s)*~P3)) * E(t)
 *   A6  {s, t, s2..sk}      (K1 + B(s,t)) * E(s2) * ... * E(sk)
 *   A7  {}                  (K1 + B(2,3)) * (K1 + B(1,1)), literal 9x9 determinant
 *   A7  {s3}                (K1 + B(2,2)) * (K1 + B(1,1)) * E(s3)
 *   A8  {p, t, s..}         (K1 + B(1,t)) * p@(K1 + B(1,1)) * E(s..)
 *   A9  {s..}               (K1 + B(1,3)) * (K1 + B(1,2)) * E(s..)
 *   A10 {s4}                (K1 + B(1,3)) * (K1 + B(1,2)) * (K1 + B(1,1)) * E(s4)
 *
 * A1..A6 have expanded forms and are compared coefficient by coefficient;
 * A7..A10 are stated as small determinants and are compared by exact
 * evaluation at more points than either side's degree.
 */
struct AppendixCase {
  std::string id;
  std::vector<long> params;

  std::string to_string() const;
};

class AppendixError : public std::invalid_argument {
 public:
  explicit AppendixError(const std::string& what) : std::invalid_argument(what) {}
};

/// The graph the form describes. Throws AppendixError on bad parameters
/// and OrderOverflow past 64 vertices.
Graph appendix_graph(const AppendixCase& c);

/// Expanded closed form for A1..A6.
IntPoly closed_form(const AppendixCase& c);

struct IdentityResult {
  bool ok = false;
  std::string method;  // "coefficients" or "evaluation"
  IntPoly direct;      // charpoly of the graph
  IntPoly expected;    // closed form; for A7..A10 interpolated, and only on mismatch
  std::string detail;  // first mismatch, empty when ok
};

IdentityResult verify_identity(const AppendixCase& c);

/// Instances swept by default: every free parameter over its first four
/// admissible values, up to three empty parts.
std::vector<AppendixCase> default_sweep(const std::string& id);

/// chi(G, 1/2) = prefactor * value for the A2..A5 graphs, where value is the
/// sign-deciding factor:
///   A2  68st + 4t - 64s - 17   (140t - 145 at s=2, 208t - 209 at s=3)
///   A3  st - s - 1/4
///   A4  beta t - alpha
///   A5  4s(t - 1) - 1
struct ThresholdValue {
  Rational value;
  Rational prefactor;  // positive
};

ThresholdValue threshold_polynomial(const AppendixCase& c);

}  // namespace halfspec
