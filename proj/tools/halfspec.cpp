#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "halfspec/appendix.hpp"
#include "halfspec/catalog.hpp"
#include "halfspec/expr.hpp"
#include "halfspec/families.hpp"
#include "halfspec/graph6.hpp"
#include "halfspec/harness.hpp"
#include "halfspec/json.hpp"
#include "halfspec/linalg.hpp"
#include "halfspec/spectral.hpp"

using namespace halfspec;

namespace {

constexpr int kUsage = 2;

const char* kGrammar = R"(Graph input forms:
  g6:<graph6>            graph6 string, e.g. g6:Ch
  expr:<expression>      graph expression
  fam:<id>[k=v,...]      family member, e.g. fam:8[t=3,p=0,parts=1:2]
  unprefixed             graph6 if it decodes, else an expression

Expression grammar, loosest to tightest:
  expr    := term ('+' term)*          disjoint union
  term    := unary ('*' unary)*        join
  unary   := '~' unary | INT '@' unary | primary     complement, k-fold join
  primary := K n | E n | B s,t | P n | C n | '(' expr ')'
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& text) {
  try {
    return parse_graph_input(text);
  } catch (const OrderOverflow& e) {
    throw UsageError(std::string("graph too large: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError("cannot read graph '" + text + "': " + e.what());
  }
}

Rational read_tol(const std::string& text) {
  try {
    Rational t = parse_rational(text);
    if (t <= 0) throw std::invalid_argument("tolerance must be positive");
    return t;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --tol: ") + e.what());
  }
}

std::string interval_text(const Rational& lo, const Rational& hi) {
  return "(" + to_decimal(lo, 9) + ", " + to_decimal(hi, 9) + "]";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string embedding_text(const Embedding& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + "]";
}

int cmd_classify(const std::string& input, bool json, const std::string& tol_text) {
  const Graph g = read_graph(input);
  const Rational tol = read_tol(tol_text);
  if (g.order() < 2 || !is_connected(g)) {
    if (json)
      print_json(Json{{"graph6", graph6_encode(g)}, {"connected", false}, {"family", nullptr}});
    else
      std::cout << "not classified: the graph is disconnected or has fewer than 2 vertices\n";
    return 0;
  }
  const auto m = classify(g);
  const SpectralVerdict v = spectral_verdict(g, tol);
  if (json) {
    Json out = to_json(g, v);
    out["family"] = m ? to_json(*m) : Json(nullptr);
    print_json(out);
    return 0;
  }
  const std::string lam = "lambda_2 in " + interval_text(v.lambda2.lo, v.lambda2.hi);
  if (m)
    std::cout << m->to_string() << ", " << lam << "\n";
  else
    std::cout << "no family (lambda_2 >= 1/2), " << lam << "\n";
  return 0;
}

int cmd_lambda2(const std::string& input, bool json, const std::string& tol_text) {
  const Graph g = read_graph(input);
  const Rational tol = read_tol(tol_text);
  if (g.order() < 2) throw UsageError("lambda_2 needs at least 2 vertices");
  const SpectralVerdict v = spectral_verdict(g, tol);
  if (json) {
    print_json(to_json(g, v));
    return 0;
  }
  std::cout << "graph6            " << graph6_encode(g) << "\n"
            << "order             " << g.order() << "\n"
            << "connected         " << (v.connected ? "yes" : "no") << "\n"
            << "lambda_2          " << interval_text(v.lambda2.lo, v.lambda2.hi) << "\n"
            << "multiplicity      " << v.lambda2.multiplicity << "\n"
            << "lambda_2 < 1/2    " << (v.lambda2_less_half ? "yes" : "no") << "\n"
            << "eigs >= 1/2       " << v.count_ge_half << "\n"
            << "chi(1/2)          " << to_string(v.chi_half) << "\n";
  return 0;
}

int cmd_charpoly(const std::string& input, bool json) {
  const Graph g = read_graph(input);
  const IntPoly p = charpoly(g);
  if (json)
    print_json(Json{{"graph6", graph6_encode(g)}, {"coefficients", to_json(p)}});
  else
    std::cout << p.to_string("x") << "\n";
  return 0;
}

int cmd_witness(const std::string& input, bool json) {
  const Graph g = read_graph(input);
  const auto w = first_forbidden_witness(g);
  if (json) {
    print_json(Json{{"graph6", graph6_encode(g)}, {"witness", w ? to_json(*w) : Json(nullptr)}});
    return 0;
  }
  if (!w) {
    std::cout << "no catalog pattern is an induced subgraph\n";
    return 0;
  }
  const CatalogEntry* e = find_entry(w->entry);
  if (static_cast<int>(w->embedding.size()) == g.order())
    std::cout << w->entry << " itself";
  else
    std::cout << w->entry << " at " << embedding_text(w->embedding);
  const auto lam = eigenvalue_interval(e->pattern, 2, default_tolerance());
  std::cout << ", lambda_2(" << w->entry << ") in " << interval_text(lam.first, lam.second);
  if (w->entry == "P4") std::cout << " = (sqrt(5)-1)/2";
  std::cout << "\n";
  return 0;
}

int cmd_gen(int family, int max_order, const std::string& input, bool json) {
  if (!input.empty()) {
    const Graph g = read_graph(input);
    if (json)
      print_json(Json{{"graph6", graph6_encode(g)}, {"order", g.order()}});
    else
      std::cout << graph6_encode(g) << "\n";
    return 0;
  }
  if (family < 1 || family > 13) throw UsageError("gen needs --family 1..13 or a graph");
  if (max_order < 2 || max_order > kMaxOrder) throw UsageError("--max-order must be in 2..64");
  const auto members = enumerate_family(family, max_order);
  if (json) {
    Json arr = Json::array();
    for (const auto& [m, g] : members) {
      Json j = to_json(m);
      j["graph6"] = graph6_encode(g);
      j["order"] = g.order();
      arr.push_back(j);
    }
    print_json(arr);
    return 0;
  }
  for (const auto& [m, g] : members) std::cout << graph6_encode(g) << "\t" << m.to_spec() << "\n";
  return 0;
}

std::vector<long> parse_params(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --params entry '" + item + "'");
    }
  }
  return out;
}

int cmd_verify_appendix(const std::string& id, const std::string& sweep, const std::string& params, bool json) {
  std::vector<std::string> ids;
  if (id == "all")
    ids = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"};
  else
    ids = {id};
  std::vector<AppendixCase> cases;
  for (const auto& i : ids) {
    if (!params.empty()) {
      cases.push_back({i, parse_params(params)});
      continue;
    }
    if (sweep != "default") throw UsageError("--sweep accepts only 'default'");
    std::vector<AppendixCase> s;
    try {
      s = default_sweep(i);
    } catch (const AppendixError& e) {
      throw UsageError(e.what());
    }
    cases.insert(cases.end(), s.begin(), s.end());
  }
  int failures = 0;
  Json arr = Json::array();
  for (const auto& c : cases) {
    IdentityResult r;
    try {
      r = verify_identity(c);
    } catch (const std::invalid_argument& e) {
      throw UsageError(c.to_string() + ": " + e.what());
    } catch (const std::length_error& e) {
      throw UsageError(c.to_string() + ": " + e.what());
    }
    if (!r.ok) ++failures;
    if (json) {
      arr.push_back(to_json(c, r));
    } else {
      std::cout << (r.ok ? "ok    " : "FAIL  ") << c.to_string() << "  (" << r.method << ")";
      if (!r.ok) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
  }
  if (json)
    print_json(Json{{"cases", cases.size()}, {"failures", failures}, {"results", arr}});
  else
    std::cout << cases.size() - failures << "/" << cases.size() << " identities hold\n";
  return failures == 0 ? 0 : 1;
}

struct CrossArgs {
  int labeled = 0;
  bool deep = false;
  std::string corpus;
  std::string expr;
  int family = 0;
  int max_order = 12;
  bool json = false;
  bool records = false;
  bool dedup = false;
  bool timing = false;
  int workers = 0;
};

int cmd_cross_check(const CrossArgs& a) {
  const int given = (a.labeled ? 1 : 0) + (!a.corpus.empty() ? 1 : 0) + (!a.expr.empty() ? 1 : 0) + (a.family ? 1 : 0);
  if (given != 1) throw UsageError("cross-check needs exactly one of --labeled, --corpus, --expr, --family");
  CorpusSource src;
  if (a.labeled)
    src = CorpusSource::labeled(a.labeled, a.deep);
  else if (!a.corpus.empty())
    src = CorpusSource::graph6_file(a.corpus);
  else if (!a.expr.empty())
    src = CorpusSource::expression(a.expr);
  else
    src = CorpusSource::family_stream(a.family, a.max_order);
  if (!a.expr.empty()) read_graph(a.expr);

  CrossCheckOptions opt;
  opt.workers = a.workers;
  opt.records = a.records;
  opt.dedup = a.dedup;
  opt.timing = a.timing;
  Report r;
  try {
    r = cross_check(src, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.json) {
    print_json(to_json(r));
    return r.passed() ? 0 : 1;
  }
  std::cout << "source            " << r.source << "\n"
            << "graphs            " << r.graphs << " (skipped " << r.skipped << ")\n";
  for (const auto& [k, v] : r.counts) std::cout << "  " << k << ": " << v << "\n";
  std::cout << "disagreements     " << r.disagreements.size() << "\n";
  for (const auto& d : r.disagreements) {
    std::cout << "  " << d.graph6 << "  " << d.rule << "  family=" << (d.family ? d.family->to_spec() : "-")
              << "  witness=" << (d.witness ? d.witness->entry : "-") << "  chi(1/2)=" << to_string(d.chi_half)
              << "  inertia=(" << d.inertia.neg << "," << d.inertia.zero << "," << d.inertia.pos << ")\n";
  }
  std::cout << "structure         " << r.structure_checked << " checked, " << r.structure_violations.size()
            << " violations\n";
  for (const auto& s : r.structure_violations) std::cout << "  " << s << "\n";
  std::cout << "max multiplicity  " << r.max_multiplicity << " over " << r.multiplicity_graphs
            << " graphs with 0 < lambda_2 < 1/2";
  if (!r.max_multiplicity_graph6.empty()) std::cout << " (" << r.max_multiplicity_graph6 << ")";
  std::cout << ", bound " << r.multiplicity_bound << "\n";
  for (const auto& s : r.multiplicity_counterexamples) std::cout << "  exceeds bound: " << s << "\n";
  if (r.wall_seconds) std::cout << "wall time         " << *r.wall_seconds << " s\n";
  std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
  return r.passed() ? 0 : 1;
}

int cmd_limit_demo(int max_n, bool json) {
  if (max_n < 5 || max_n > kMaxOrder) throw UsageError("--max-n must be in 5..64");
  const LimitReport r = limit_demo(max_n);
  if (json) {
    print_json(to_json(r));
    return r.passed() ? 0 : 1;
  }
  std::cout << "  n  lambda_2                residual\n";
  for (const auto& row : r.rows) {
    std::cout << (row.n < 10 ? "  " : " ") << row.n << "  " << to_decimal(row.hi, 10) << "  " << row.residual
              << (row.below_half && row.cubic_straddles ? "" : "  !") << "\n";
  }
  std::cout << "increasing " << (r.increasing ? "yes" : "no") << ", below 1/2 " << (r.below_half ? "yes" : "no")
            << ", cubic straddles " << (r.straddles ? "yes" : "no") << ", 1/2 - lambda_2 at n=" << max_n << " < "
            << to_decimal(r.final_gap, 9) << "\n";
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for graphs whose second largest eigenvalue is below 1/2"};
  app.require_subcommand(1);
  app.footer(kGrammar);

  std::string input, tol = "1/10000000";
  bool json = false;

  auto* classify_cmd = app.add_subcommand("classify", "Match a connected graph against the 13 families");
  classify_cmd->add_option("graph", input, "Graph")->required();
  classify_cmd->add_option("--tol", tol, "Width of the reported lambda_2 interval");
  classify_cmd->add_flag("--json", json);

  auto* lambda2_cmd = app.add_subcommand("lambda2", "Exact lambda_2 verdict and isolating interval");
  lambda2_cmd->add_option("graph", input, "Graph")->required();
  lambda2_cmd->add_option("--tol", tol, "Width of the reported lambda_2 interval");
  lambda2_cmd->add_flag("--json", json);

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial det(xI - A)");
  charpoly_cmd->add_option("graph", input, "Graph")->required();
  charpoly_cmd->add_flag("--json", json);

  auto* witness_cmd = app.add_subcommand("witness", "First catalog pattern contained as an induced subgraph");
  witness_cmd->add_option("graph", input, "Graph")->required();
  witness_cmd->add_flag("--json", json);

  int family = 0, max_order = 12;
  auto* gen_cmd = app.add_subcommand("gen", "Print graph6 for a graph or every member of a family");
  gen_cmd->add_option("graph", input, "Graph");
  gen_cmd->add_option("--family", family, "Family id 1..13");
  gen_cmd->add_option("--max-order", max_order, "Largest member order");
  gen_cmd->add_flag("--json", json);

  std::string appendix_id, sweep = "default", params;
  auto* verify_cmd = app.add_subcommand("verify-appendix", "Check closed-form characteristic polynomials");
  verify_cmd->add_option("--id", appendix_id, "A1..A10 or all")->required();
  verify_cmd->add_option("--sweep", sweep, "Parameter sweep (default)");
  verify_cmd->add_option("--params", params, "Single instance, comma separated");
  verify_cmd->add_flag("--json", json);

  CrossArgs cross;
  auto* cross_cmd = app.add_subcommand("cross-check", "Compare the spectral predicate, classifier and catalog");
  cross_cmd->add_option("--labeled", cross.labeled, "All connected labeled graphs of this order (2..8)");
  cross_cmd->add_flag("--deep", cross.deep, "Allow --labeled 8");
  cross_cmd->add_option("--corpus", cross.corpus, "Newline-delimited graph6 file");
  cross_cmd->add_option("--expr", cross.expr, "Single graph");
  cross_cmd->add_option("--family", cross.family, "Every member of a family");
  cross_cmd->add_option("--max-order", cross.max_order, "Largest member order for --family");
  cross_cmd->add_option("--workers", cross.workers, "Worker threads (default HALFSPEC_WORKERS or all cores)");
  cross_cmd->add_flag("--records", cross.records, "Include one record per graph");
  cross_cmd->add_flag("--dedup", cross.dedup, "Check one graph per isomorphism class");
  cross_cmd->add_flag("--timing", cross.timing, "Report wall time");
  cross_cmd->add_flag("--json", cross.json);

  int max_n = 64;
  auto* limit_cmd = app.add_subcommand("limit-demo", "lambda_2 of (E2+K2)*E(n-4) approaching 1/2");
  limit_cmd->add_option("--max-n", max_n, "Largest n (5..64)");
  limit_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(input, json, tol);
    if (*lambda2_cmd) return cmd_lambda2(input, json, tol);
    if (*charpoly_cmd) return cmd_charpoly(input, json);
    if (*witness_cmd) return cmd_witness(input, json);
    if (*gen_cmd) return cmd_gen(family, max_order, input, json);
    if (*verify_cmd) return cmd_verify_appendix(appendix_id, sweep, params, json);
    if (*cross_cmd) {
      cross.json = cross.json || json;
      return cmd_cross_check(cross);
    }
    if (*limit_cmd) return cmd_limit_demo(max_n, json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
