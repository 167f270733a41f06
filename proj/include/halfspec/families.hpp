#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "halfspec/graph.hpp"
#include "halfspec/rational.hpp"

namespace halfspec {

// Threshold quantities of the family side conditions.

struct AlphaBeta {
  Integer alpha;
  Integer beta;
};

/// alpha = 16 s1 s2 s3 + 4(s1 s2 + s2 s3 + s1 s3) - 1,
/// beta  = 16 s1 s2 s3 - 4(s1 + s2 + s3 + 1).
AlphaBeta alpha_beta(long s1, long s2, long s3);

/// Sum of 2 s_i / (2 s_i + 1).
Rational ratio_sum(const std::vector<int>& parts);

/// gamma(p, t) = 4tp - 10p - 4t + 1 + (2t - 5) ratio_sum(parts).
Rational gamma_value(long p, long t, const std::vector<int>& parts);

/// delta(lambda) = (1 - sum s_i/(lambda + s_i)) (lambda^3 + (s+t+1) lambda^2
/// + st lambda - st) - (s+t+1) lambda^2 - 2 st lambda + st, at lambda = 1/2.
Rational delta_at_half(long s, long t, const std::vector<int>& parts);

/// Join factor shapes a graph with lambda_2 < 1/2 can have.
struct FactorShape {
  enum class Kind { Empty, E2UnionK2, K1PlusMultipartite, K1PlusP3barJoin };
  Kind kind = Kind::Empty;
  int m = 0;               // Empty: order; K1PlusP3barJoin: s
  std::vector<int> parts;  // K1PlusMultipartite: ascending part sizes

  std::string to_string() const;
  friend bool operator==(const FactorShape&, const FactorShape&) = default;
  friend auto operator<=>(const FactorShape&, const FactorShape&) = default;
};

/// Shape of a join factor (a graph with connected complement), or nothing.
std::optional<FactorShape> recognize_factor(const Graph& g);

/// Parameter vector of a family member. Scalars keep the family's declared
/// order; parts is the multiset of empty-factor sizes, ascending.
struct FamilyParams {
  std::vector<std::pair<std::string, long>> scalars;
  std::optional<std::vector<int>> parts;

  long get(const std::string& name) const;
  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct FamilyMatch {
  int family = 0;  // 1..13
  FamilyParams params;

  /// "family 8, t=3, p=0, parts=[1]"
  std::string to_string() const;
  /// "fam:8[t=3,p=0,parts=1]"
  std::string to_spec() const;
  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

class FamilyError : public std::invalid_argument {
 public:
  explicit FamilyError(const std::string& what) : std::invalid_argument(what) {}
};

/// Scalar names of a family, in declared order, and whether it takes parts.
std::vector<std::string> family_scalar_names(int family);
bool family_has_parts(int family);

struct Admissibility {
  bool ok = false;
  std::string reason;  // names the violated constraint when !ok
};

/// Checks structure and side conditions exactly.
Admissibility admissible(const FamilyMatch& m);

/// Vertex count of the member; no order cap applied.
long long family_order(const FamilyMatch& m);

/// The member graph. Throws FamilyError when inadmissible and OrderOverflow
/// past 64 vertices.
Graph build_family(const FamilyMatch& m);

/// Recognizes a connected graph of order >= 2 as a family member; first
/// admissible match in ascending family id.
std::optional<FamilyMatch> classify(const Graph& g);

/// Every admissible member of order <= max_order, in lexicographic
/// parameter order.
std::vector<std::pair<FamilyMatch, Graph>> enumerate_family(int family, int max_order);

/// Parses "fam:8[t=3,p=0,parts=1:1:2]" (the "fam:" prefix is optional).
FamilyMatch parse_family_spec(const std::string& text);

}  // namespace halfspec
