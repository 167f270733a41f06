#include "halfspec/json.hpp"

#include "halfspec/graph6.hpp"

namespace halfspec {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json string_list(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

}  // namespace

Json to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeff_strings()) out.push_back(c);
  return out;
}

Json to_json(const FamilyMatch& m) {
  Json params = Json::object();
  for (const auto& [k, v] : m.params.scalars) params[k] = v;
  if (m.params.parts) params["parts"] = *m.params.parts;
  return Json{{"family", m.family}, {"params", params}, {"spec", m.to_spec()}};
}

Json to_json(const ForbiddenWitness& w) { return Json{{"entry", w.entry}, {"map", w.embedding}}; }

Json to_json(const Lambda2Report& r) {
  return Json{{"lo", to_string(r.lo)},
              {"hi", to_string(r.hi)},
              {"decimal", to_decimal(r.hi, 9)},
              {"multiplicity", r.multiplicity}};
}

Json to_json(const Graph& g, const SpectralVerdict& v) {
  return Json{{"graph6", graph6_encode(g)},
              {"order", g.order()},
              {"connected", v.connected},
              {"lambda2_less_half", v.lambda2_less_half},
              {"count_ge_half", v.count_ge_half},
              {"chi_half", to_string(v.chi_half)},
              {"lambda2", Json::array({to_string(v.lambda2.lo), to_string(v.lambda2.hi)})},
              {"multiplicity", v.lambda2.multiplicity}};
}

Json to_json(const AppendixCase& c, const IdentityResult& r) {
  Json out{{"id", c.id}, {"params", c.params}, {"ok", r.ok}, {"method", r.method}};
  if (!r.ok) {
    out["detail"] = r.detail;
    out["direct"] = to_json(r.direct);
    if (!r.expected.is_zero()) out["expected"] = to_json(r.expected);
  }
  return out;
}

Json to_json(const Report& r) {
  Json out{{"schema", 1}, {"source", r.source}, {"passed", r.passed()}, {"graphs", r.graphs}, {"skipped", r.skipped}};
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  out["counts"] = counts;
  Json fams = Json::object();
  for (const auto& [k, v] : r.family_counts) fams[std::to_string(k)] = v;
  out["family_counts"] = fams;

  Json dis = Json::array();
  for (const auto& d : r.disagreements) {
    dis.push_back(Json{{"graph6", d.graph6},
                       {"rule", d.rule},
                       {"lambda2_less_half", d.lambda2_less_half},
                       {"family", optional_json(d.family)},
                       {"witness", optional_json(d.witness)},
                       {"chi_half", to_string(d.chi_half)},
                       {"inertia", Json::array({d.inertia.neg, d.inertia.zero, d.inertia.pos})}});
  }
  out["disagreements"] = dis;

  out["structure"] = Json{{"checked", r.structure_checked}, {"violations", string_list(r.structure_violations)}};
  out["multiplicity"] = Json{{"graphs", r.multiplicity_graphs},
                             {"max", r.max_multiplicity},
                             {"max_graph6", r.max_multiplicity_graph6},
                             {"bound", r.multiplicity_bound},
                             {"counterexamples", string_list(r.multiplicity_counterexamples)}};

  if (!r.records.empty()) {
    Json recs = Json::array();
    for (const auto& rec : r.records) {
      recs.push_back(Json{{"graph6", rec.graph6},
                          {"lambda2_less_half", rec.lambda2_less_half},
                          {"count_ge_half", rec.count_ge_half},
                          {"chi_half", to_string(rec.chi_half)},
                          {"family", optional_json(rec.family)},
                          {"witness", optional_json(rec.witness)},
                          {"lambda2", Json::array({to_string(rec.lambda2.lo), to_string(rec.lambda2.hi)})},
                          {"multiplicity", rec.lambda2.multiplicity}});
    }
    out["records"] = recs;
  }
  if (r.wall_seconds) out["wall_seconds"] = *r.wall_seconds;
  return out;
}

Json to_json(const LimitReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"lo", to_string(row.lo)},
                        {"hi", to_string(row.hi)},
                        {"decimal", to_decimal(row.hi, 10)},
                        {"residual", row.residual},
                        {"below_half", row.below_half},
                        {"cubic_straddles", row.cubic_straddles}});
  }
  return Json{{"passed", r.passed()},
              {"increasing", r.increasing},
              {"below_half", r.below_half},
              {"straddles", r.straddles},
              {"final_gap", to_decimal(r.final_gap, 12)},
              {"rows", rows}};
}

}  // namespace halfspec
