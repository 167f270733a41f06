#include "halfspec/graph.hpp"

#include <algorithm>
#include <numeric>

#include "halfspec/canonical.hpp"

namespace halfspec {

namespace {

void check_order(long long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative order");
  if (n > kMaxOrder)
    throw OrderOverflow(std::string(what) + ": order " + std::to_string(n) +
                        " exceeds the 64-vertex cap");
}

}  // namespace

Graph::Graph(int order) : order_(order) { check_order(order, "Graph"); }

int Graph::edge_count() const {
  int twice = 0;
  for (int i = 0; i < order_; ++i) twice += std::popcount(adj_[i]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= order_ || v >= order_)
    throw std::invalid_argument("add_edge: bad vertex pair");
  adj_[u] |= VertexSet{1} << v;
  adj_[v] |= VertexSet{1} << u;
}

void Graph::remove_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= order_ || v >= order_)
    throw std::invalid_argument("remove_edge: bad vertex pair");
  adj_[u] &= ~(VertexSet{1} << v);
  adj_[v] &= ~(VertexSet{1} << u);
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int s, int t) {
  if (s < 0 || t < 0) throw std::invalid_argument("complete_bipartite: negative part");
  return join(empty_graph(s), empty_graph(t));
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_multipartite(std::span<const int> parts) {
  Graph g;
  for (int p : parts) g = join(g, empty_graph(p));
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  check_order(static_cast<long long>(a.order()) + b.order(), "union");
  Graph g(a.order() + b.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (a.adjacent(i, j)) g.add_edge(i, j);
  const int off = a.order();
  for (int i = 0; i < b.order(); ++i)
    for (int j = i + 1; j < b.order(); ++j)
      if (b.adjacent(i, j)) g.add_edge(off + i, off + j);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < b.order(); ++j) g.add_edge(i, a.order() + j);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) h.add_edge(i, j);
  return h;
}

Graph kfold_join(int k, const Graph& g) {
  if (k < 1) throw std::invalid_argument("kfold_join: k must be at least 1");
  check_order(static_cast<long long>(k) * g.order(), "k-fold join");
  Graph out = g;
  for (int i = 1; i < k; ++i) out = join(out, g);
  return out;
}

Graph kfold_union(int k, const Graph& g) {
  if (k < 0) throw std::invalid_argument("kfold_union: negative k");
  check_order(static_cast<long long>(k) * g.order(), "k-fold union");
  Graph out;
  for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  s &= g.vertices();
  std::vector<int> keep;
  for (VertexSet rest = s; rest; rest &= rest - 1) keep.push_back(std::countr_zero(rest));
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("relabel: permutation size mismatch");
  Graph h(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) h.add_edge(perm[i], perm[j]);
  return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen) {
    VertexSet comp = unseen & (~unseen + 1);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet comp = 1;
  VertexSet frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    frontier = next & ~comp;
    comp |= next;
  }
  return comp == g.vertices();
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.row(v) == 0) out |= VertexSet{1} << v;
  return out;
}

bool is_complete(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != g.order() - 1) return false;
  return true;
}

bool is_edgeless(const Graph& g) { return isolated_vertices(g) == g.vertices(); }

JoinDecomposition complement_components(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("complement_components: empty graph");
  const auto comps = connected_components(complement(g));

  struct Keyed {
    Graph factor;
    VertexSet verts;
    std::string key;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(comps.size());
  for (VertexSet c : comps) {
    Graph f = induced_subgraph(g, c);
    std::string key = comps.size() > 1 ? canonical_key(f) : std::string{};
    keyed.push_back({std::move(f), c, std::move(key)});
  }
  // Components are already ordered by smallest vertex, so a stable sort
  // breaks key ties by that.
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.factor.order() != b.factor.order()) return a.factor.order() < b.factor.order();
    return a.key < b.key;
  });

  JoinDecomposition d;
  d.vertex_partition.resize(g.order());
  for (std::size_t f = 0; f < keyed.size(); ++f) {
    int local = 0;
    for (VertexSet rest = keyed[f].verts; rest; rest &= rest - 1)
      d.vertex_partition[std::countr_zero(rest)] = {static_cast<int>(f), local++};
    d.factors.push_back(std::move(keyed[f].factor));
    d.factor_vertices.push_back(keyed[f].verts);
  }
  return d;
}

Graph rejoin(const JoinDecomposition& d) {
  const int n = static_cast<int>(d.vertex_partition.size());
  std::vector<int> offset(d.factors.size() + 1, 0);
  for (std::size_t f = 0; f < d.factors.size(); ++f)
    offset[f + 1] = offset[f] + d.factors[f].order();
  if (offset.back() != n) throw std::invalid_argument("rejoin: partition does not cover factors");

  Graph joined;
  for (const Graph& f : d.factors) joined = join(joined, f);
  std::vector<int> inverse(n);  // joined position -> original vertex
  for (int v = 0; v < n; ++v) {
    const auto& slot = d.vertex_partition[v];
    inverse[offset[slot.factor] + slot.local] = v;
  }
  return relabel(joined, inverse);
}

}  // namespace halfspec
