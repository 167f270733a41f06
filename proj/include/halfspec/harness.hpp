#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halfspec/catalog.hpp"
#include "halfspec/families.hpp"
#include "halfspec/graph.hpp"
#include "halfspec/linalg.hpp"
#include "halfspec/rational.hpp"
#include "halfspec/spectral.hpp"

namespace halfspec {

/// Reads a graph given as "fam:<spec>", "expr:<expression>", "g6:<graph6>",
/// or unprefixed: graph6 when every byte is printable graph6 and decodes,
/// otherwise an expression. Errors propagate from the respective parser.
Graph parse_graph_input(const std::string& text);

/// Labeled graph on n vertices whose edge set is the bitmask `mask` over the
/// upper triangle in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
Graph labeled_graph(int n, std::uint64_t mask);

/// Calls fn on every connected labeled graph of order n, masks ascending.
/// Needs 2 <= n <= 8.
void enumerate_connected_labeled(int n, const std::function<void(const Graph&)>& fn);

struct CorpusSource {
  enum class Kind { Labeled, Graph6File, Expression, Family };
  Kind kind = Kind::Labeled;
  int n = 0;          // Labeled
  bool deep = false;  // Labeled: n = 8 opt-in
  std::string text;   // Graph6File: path; Expression: expression or fam: spec
  int family = 0;     // Family
  int max_order = 0;  // Family

  static CorpusSource labeled(int n, bool deep = false);
  static CorpusSource graph6_file(const std::string& path);
  static CorpusSource expression(const std::string& text);
  static CorpusSource family_stream(int family, int max_order);

  std::string describe() const;
};

struct CrossCheckOptions {
  int workers = 0;  // 0: HALFSPEC_WORKERS, else hardware concurrency
  bool records = false;
  bool dedup = false;
  bool timing = false;
  Rational tol = default_tolerance();
  int multiplicity_bound = 5;
};

struct GraphRecord {
  std::string graph6;
  bool lambda2_less_half = false;
  int count_ge_half = 0;
  Rational chi_half;
  std::optional<FamilyMatch> family;
  std::optional<ForbiddenWitness> witness;
  Lambda2Report lambda2;
};

struct Disagreement {
  std::string graph6;
  std::string rule;  // predicate-without-family, family-without-predicate, witness-with-predicate
  bool lambda2_less_half = false;
  std::optional<FamilyMatch> family;
  std::optional<ForbiddenWitness> witness;
  Rational chi_half;
  Inertia inertia;  // of A - I/2
};

struct Report {
  std::string source;
  long long graphs = 0;   // connected graphs checked
  long long skipped = 0;  // disconnected, order < 2, or duplicates under --dedup
  std::map<std::string, long long> counts;
  std::map<int, long long> family_counts;
  std::vector<Disagreement> disagreements;
  std::vector<GraphRecord> records;

  long long structure_checked = 0;            // graphs with lambda_2 < 1/2
  std::vector<std::string> structure_violations;  // complement connected or a factor without isolated vertex

  int multiplicity_bound = 5;
  long long multiplicity_graphs = 0;  // graphs with 0 < lambda_2 < 1/2
  int max_multiplicity = 0;
  std::string max_multiplicity_graph6;
  std::vector<std::string> multiplicity_counterexamples;

  std::optional<double> wall_seconds;

  bool passed() const {
    return disagreements.empty() && structure_violations.empty() && multiplicity_counterexamples.empty();
  }
};

/// Worker count from HALFSPEC_WORKERS, defaulting to hardware concurrency.
int default_workers();

/// Throws std::invalid_argument on a bad source and std::runtime_error on
/// unreadable corpus files.
Report cross_check(const CorpusSource& src, const CrossCheckOptions& opt = {});

struct LimitRow {
  int n = 0;
  Rational lo;  // lambda_2 in (lo, hi]
  Rational hi;
  double residual = 0;  // 1/2 + (l^3 - l^2)/(4(n-4)) - l at the midpoint
  bool below_half = false;
  bool cubic_straddles = false;
};

struct LimitReport {
  std::vector<LimitRow> rows;
  bool increasing = true;
  bool below_half = true;
  bool straddles = true;
  Rational final_gap;  // upper bound on 1/2 - lambda_2 at the last n

  bool passed() const { return increasing && below_half && straddles; }
};

/// G_n = (E2 + K2) * E(n-4) for n = 5..max_n, lambda_2 isolated to 1e-9.
LimitReport limit_demo(int max_n);

}  // namespace halfspec
