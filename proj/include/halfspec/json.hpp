#pragma once

#include <json.hpp>

#include "halfspec/appendix.hpp"
#include "halfspec/catalog.hpp"
#include "halfspec/families.hpp"
#include "halfspec/harness.hpp"
#include "halfspec/poly.hpp"
#include "halfspec/spectral.hpp"

namespace halfspec {

// Field order is fixed and rationals are written as exact "p/q" strings, so
// equal inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// Ascending coefficient strings.
Json to_json(const IntPoly& p);
Json to_json(const FamilyMatch& m);
Json to_json(const ForbiddenWitness& w);
Json to_json(const Lambda2Report& r);
/// Adds "graph6" in front of the verdict fields.
Json to_json(const Graph& g, const SpectralVerdict& v);
Json to_json(const AppendixCase& c, const IdentityResult& r);
Json to_json(const Report& r);
Json to_json(const LimitReport& r);

}  // namespace halfspec
