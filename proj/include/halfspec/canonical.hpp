#pragma once

#include <string>
#include <vector>

#include "halfspec/graph.hpp"

namespace halfspec {

/// Canonical labeling by individualization-refinement. perm[v] is the new
/// label of v; isomorphic inputs map to identical relabeled graphs.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

/// graph6 text of canonical_form(g); equal iff the graphs are isomorphic.
std::string canonical_key(const Graph& g);

}  // namespace halfspec
