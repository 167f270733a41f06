#include "halfspec/harness.hpp"

#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <set>
#include <stdexcept>
#include <thread>

#include "halfspec/canonical.hpp"
#include "halfspec/expr.hpp"
#include "halfspec/graph6.hpp"
#include "halfspec/poly.hpp"
#include "halfspec/sturm.hpp"

namespace halfspec {

Graph parse_graph_input(const std::string& text) {
  if (text.starts_with("fam:")) return build_family(parse_family_spec(text));
  if (text.starts_with("expr:")) return eval_expr(parse_expr(text.substr(5)));
  if (text.starts_with("g6:")) return graph6_decode(text.substr(3));
  bool printable = !text.empty();
  for (unsigned char ch : text)
    if (ch < 63 || ch > 126) printable = false;
  if (printable) {
    try {
      return graph6_decode(text);
    } catch (const Graph6Error&) {
    }
  }
  return eval_expr(parse_expr(text));
}

Graph labeled_graph(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(i, j);
  return g;
}

namespace {

void check_labeled_order(int n, bool deep) {
  if (n < 2 || n > 8) throw std::invalid_argument("labeled enumeration needs 2 <= n <= 8");
  if (n == 8 && !deep) throw std::invalid_argument("labeled enumeration at n = 8 needs --deep");
}

std::uint64_t labeled_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

}  // namespace

void enumerate_connected_labeled(int n, const std::function<void(const Graph&)>& fn) {
  check_labeled_order(n, true);
  const std::uint64_t total = labeled_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = labeled_graph(n, mask);
    if (is_connected(g)) fn(g);
  }
}

CorpusSource CorpusSource::labeled(int n, bool deep) {
  CorpusSource s;
  s.kind = Kind::Labeled;
  s.n = n;
  s.deep = deep;
  return s;
}

CorpusSource CorpusSource::graph6_file(const std::string& path) {
  CorpusSource s;
  s.kind = Kind::Graph6File;
  s.text = path;
  return s;
}

CorpusSource CorpusSource::expression(const std::string& text) {
  CorpusSource s;
  s.kind = Kind::Expression;
  s.text = text;
  return s;
}

CorpusSource CorpusSource::family_stream(int family, int max_order) {
  CorpusSource s;
  s.kind = Kind::Family;
  s.family = family;
  s.max_order = max_order;
  return s;
}

std::string CorpusSource::describe() const {
  switch (kind) {
    case Kind::Labeled:
      return "labeled-exhaustive(" + std::to_string(n) + ")";
    case Kind::Graph6File:
      return "graph6-file(" + text + ")";
    case Kind::Expression:
      return "expression(" + text + ")";
    case Kind::Family:
      return "family(" + std::to_string(family) + ", order<=" + std::to_string(max_order) + ")";
  }
  return {};
}

int default_workers() {
  if (const char* env = std::getenv("HALFSPEC_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Indexed view of a corpus: get(i) yields the i-th graph or nothing when the
// slot is filtered out.
struct Items {
  std::uint64_t count = 0;
  std::function<std::optional<Graph>(std::uint64_t)> get;
};

constexpr std::uint64_t kChunk = 4096;

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read corpus file " + path);
  std::vector<Graph> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with(">>graph6<<")) line.erase(0, 10);
    if (line.empty()) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const Graph6Error& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// Runs fn(chunk_index, first, last) over [0, count) split into fixed chunks.
// Chunk c goes to worker c mod workers, so the partition is static.
void run_chunks(std::uint64_t count, int workers,
                const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
  const std::size_t chunks = static_cast<std::size_t>((count + kChunk - 1) / kChunk);
  auto work = [&](int w) {
    for (std::size_t c = static_cast<std::size_t>(w); c < chunks; c += static_cast<std::size_t>(workers)) {
      const std::uint64_t first = c * kChunk;
      fn(c, first, std::min(count, first + kChunk));
    }
  };
  if (workers <= 1 || chunks <= 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();
}

bool structure_holds(const Graph& g) {
  const auto comps = connected_components(complement(g));
  if (comps.size() < 2) return false;
  for (VertexSet part : comps) {
    bool isolated = false;
    for (VertexSet rest = part; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((g.row(v) & part) == 0) isolated = true;
    }
    if (!isolated) return false;
  }
  return true;
}

std::string combination(bool less_half, bool family, bool witness) {
  std::string key = less_half ? "less_half" : "not_less_half";
  if (family) key += "+family";
  if (witness) key += "+witness";
  if (!family && !witness) key += "+none";
  return key;
}

struct Partial {
  long long graphs = 0;
  long long skipped = 0;
  std::map<std::string, long long> counts;
  std::map<int, long long> family_counts;
  std::vector<Disagreement> disagreements;
  std::vector<GraphRecord> records;
  long long structure_checked = 0;
  std::vector<std::string> structure_violations;
  long long multiplicity_graphs = 0;
  int max_multiplicity = 0;
  std::string max_multiplicity_graph6;
  std::vector<std::string> multiplicity_counterexamples;
};

class Checker {
 public:
  explicit Checker(const CrossCheckOptions& opt) : opt_(opt) {}

  void check(const Graph& g, Partial& out) {
    static const Rational half = make_rational(1, 2);
    ++out.graphs;
    const Inertia in = inertia_of_shift(g, half);
    const int ge_half = in.pos + in.zero;
    const bool less = ge_half <= 1;
    const auto fam = classify(g);
    const auto wit = first_forbidden_witness(g);

    ++out.counts[combination(less, fam.has_value(), wit.has_value())];
    if (fam) ++out.family_counts[fam->family];

    auto disagree = [&](const char* rule) {
      Disagreement d;
      d.graph6 = graph6_encode(g);
      d.rule = rule;
      d.lambda2_less_half = less;
      d.family = fam;
      d.witness = wit;
      d.chi_half = chi_at_half(g);
      d.inertia = in;
      out.disagreements.push_back(std::move(d));
    };
    if (less && !fam) disagree("predicate-without-family");
    if (!less && fam) disagree("family-without-predicate");
    if (less && wit) disagree("witness-with-predicate");

    if (less) {
      ++out.structure_checked;
      if (!structure_holds(g)) out.structure_violations.push_back(graph6_encode(g));
      // lambda_2 > 0 iff at least two positive eigenvalues
      if (inertia_of_shift(g, Rational(0)).pos >= 2) {
        ++out.multiplicity_graphs;
        const int m = multiplicity(g);
        if (m > out.max_multiplicity) {
          out.max_multiplicity = m;
          out.max_multiplicity_graph6 = graph6_encode(g);
        }
        if (m > opt_.multiplicity_bound) out.multiplicity_counterexamples.push_back(graph6_encode(g));
      }
    }

    if (opt_.records) {
      GraphRecord r;
      r.graph6 = graph6_encode(g);
      r.lambda2_less_half = less;
      r.count_ge_half = ge_half;
      r.chi_half = chi_at_half(g);
      r.family = fam;
      r.witness = wit;
      r.lambda2 = lambda2_report(g, opt_.tol);
      out.records.push_back(std::move(r));
    }
  }

 private:
  int multiplicity(const Graph& g) {
    IntPoly chi = charpoly(g);
    std::string key = chi.to_string("x");
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const int m = lambda2_report(chi, opt_.tol).multiplicity;
    cache_.emplace(std::move(key), m);
    return m;
  }

  const CrossCheckOptions& opt_;
  std::map<std::string, int> cache_;
};

void merge(Report& r, Partial&& p) {
  r.graphs += p.graphs;
  r.skipped += p.skipped;
  for (const auto& [k, v] : p.counts) r.counts[k] += v;
  for (const auto& [k, v] : p.family_counts) r.family_counts[k] += v;
  for (auto& d : p.disagreements) r.disagreements.push_back(std::move(d));
  for (auto& rec : p.records) r.records.push_back(std::move(rec));
  r.structure_checked += p.structure_checked;
  for (auto& s : p.structure_violations) r.structure_violations.push_back(std::move(s));
  r.multiplicity_graphs += p.multiplicity_graphs;
  if (p.max_multiplicity > r.max_multiplicity) {
    r.max_multiplicity = p.max_multiplicity;
    r.max_multiplicity_graph6 = std::move(p.max_multiplicity_graph6);
  }
  for (auto& s : p.multiplicity_counterexamples) r.multiplicity_counterexamples.push_back(std::move(s));
}

bool checkable(const Graph& g) { return g.order() >= 2 && is_connected(g); }

}  // namespace

Report cross_check(const CorpusSource& src, const CrossCheckOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const int workers = opt.workers > 0 ? opt.workers : default_workers();

  std::vector<Graph> list;
  Items items;
  switch (src.kind) {
    case CorpusSource::Kind::Labeled: {
      check_labeled_order(src.n, src.deep);
      const int n = src.n;
      items.count = labeled_count(n);
      items.get = [n](std::uint64_t mask) -> std::optional<Graph> {
        Graph g = labeled_graph(n, mask);
        if (!is_connected(g)) return std::nullopt;
        return g;
      };
      break;
    }
    case CorpusSource::Kind::Graph6File:
      list = read_graph6_file(src.text);
      break;
    case CorpusSource::Kind::Expression:
      list.push_back(parse_graph_input(src.text));
      break;
    case CorpusSource::Kind::Family:
      for (auto& [m, g] : enumerate_family(src.family, src.max_order)) list.push_back(std::move(g));
      break;
  }
  if (src.kind != CorpusSource::Kind::Labeled) {
    items.count = list.size();
    items.get = [&list](std::uint64_t i) -> std::optional<Graph> {
      if (!checkable(list[i])) return std::nullopt;
      return list[i];
    };
  }

  Report report;
  report.source = src.describe();
  report.multiplicity_bound = opt.multiplicity_bound;

  if (opt.dedup) {
    // keep the first index of every isomorphism class, in index order
    const std::size_t chunks = static_cast<std::size_t>((items.count + kChunk - 1) / kChunk);
    std::vector<std::vector<std::pair<std::uint64_t, std::string>>> keys(chunks);
    std::vector<long long> filtered(chunks, 0);
    run_chunks(items.count, workers, [&](std::size_t c, std::uint64_t first, std::uint64_t last) {
      for (std::uint64_t i = first; i < last; ++i) {
        if (auto g = items.get(i))
          keys[c].emplace_back(i, canonical_key(*g));
        else
          ++filtered[c];
      }
    });
    std::set<std::string> seen;
    auto kept = std::make_shared<std::vector<std::uint64_t>>();
    for (std::size_t c = 0; c < chunks; ++c) {
      report.skipped += filtered[c];
      for (auto& [i, key] : keys[c]) {
        if (seen.insert(std::move(key)).second)
          kept->push_back(i);
        else
          ++report.skipped;
      }
    }
    auto base = items.get;
    items.count = kept->size();
    items.get = [base, kept](std::uint64_t i) { return base((*kept)[i]); };
  }

  const std::size_t chunks = static_cast<std::size_t>((items.count + kChunk - 1) / kChunk);
  std::vector<Partial> partials(chunks);
  std::vector<std::unique_ptr<Checker>> checkers;
  for (int w = 0; w < workers; ++w) checkers.push_back(std::make_unique<Checker>(opt));
  run_chunks(items.count, workers, [&](std::size_t c, std::uint64_t first, std::uint64_t last) {
    Checker& checker = *checkers[c % static_cast<std::size_t>(workers)];
    for (std::uint64_t i = first; i < last; ++i) {
      if (auto g = items.get(i))
        checker.check(*g, partials[c]);
      else
        ++partials[c].skipped;
    }
  });
  for (auto& p : partials) merge(report, std::move(p));

  if (opt.timing)
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

LimitReport limit_demo(int max_n) {
  if (max_n < 5 || max_n > kMaxOrder) throw std::invalid_argument("limit demo needs 5 <= max_n <= 64");
  const Rational half = make_rational(1, 2);
  const Rational tol = make_rational(1, 1'000'000'000);
  const Graph base = disjoint_union(empty_graph(2), complete_graph(2));

  LimitReport rep;
  std::optional<RootCounter> prev_counter;
  for (int n = 5; n <= max_n; ++n) {
    const Graph g = join(base, empty_graph(n - 4));
    RootCounter rc(charpoly(g));
    auto iv = rc.isolate_kth_largest(2, tol);

    if (!rep.rows.empty()) {
      // refine both until the intervals separate or get absurdly thin
      LimitRow& prev = rep.rows.back();
      Rational t = tol;
      while (iv.first < prev.hi && t > pow2(-200)) {
        t /= 1024;
        iv = rc.isolate_kth_largest(2, t);
        auto piv = prev_counter->isolate_kth_largest(2, t);
        prev.lo = piv.first;
        prev.hi = piv.second;
      }
      if (iv.first < prev.hi) rep.increasing = false;
    }

    LimitRow row;
    row.n = n;
    row.lo = iv.first;
    row.hi = iv.second;
    row.below_half = lambda2_less_half(g);
    const Rational k = n - 4;
    const IntPoly cubic{2L * (n - 4), -4L * (n - 4), -1, 1};
    const int s_lo = cubic.sign_at(row.lo), s_hi = cubic.sign_at(row.hi);
    row.cubic_straddles = s_hi == 0 || s_lo * s_hi < 0;
    const Rational mid = (row.lo + row.hi) / 2;
    const Rational res = half + (mid * mid * mid - mid * mid) / (4 * k) - mid;
    row.residual = to_double(res);

    rep.below_half = rep.below_half && row.below_half;
    rep.straddles = rep.straddles && row.cubic_straddles;
    rep.rows.push_back(std::move(row));
    prev_counter.emplace(std::move(rc));
  }
  rep.final_gap = half - rep.rows.back().lo;
  return rep;
}

}  // namespace halfspec
