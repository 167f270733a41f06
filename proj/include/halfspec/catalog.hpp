#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halfspec/graph.hpp"
#include "halfspec/rational.hpp"

namespace halfspec {

/// A known graph with lambda_2 >= 1/2.
struct CatalogEntry {
  std::string id;          // "P4", "2K2", "H1".."H13", "Y1".."Y8"
  std::string expression;  // graph expression it is built from
  Graph pattern;
  std::optional<Rational> table_lambda2;  // published 4-decimal value
};

/// P4, 2K2, H1..H13, Y1..Y8 in that order. Built once; construction checks
/// every pattern against the exact predicate and throws std::logic_error if
/// one has lambda_2 < 1/2.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_entry(const std::string& id);

/// embedding[i] is the host vertex of pattern vertex i.
using Embedding = std::vector<int>;

/// Induced embedding of pattern in host, or nothing. Pattern vertices are
/// placed by descending degree (ties by index) and host candidates tried in
/// ascending order, so the result is the lexicographically least embedding
/// in that placement order.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern);

struct ForbiddenWitness {
  std::string entry;
  Embedding embedding;
};

/// First catalog entry that embeds in host, with its least embedding.
std::optional<ForbiddenWitness> first_forbidden_witness(const Graph& host);

}  // namespace halfspec
