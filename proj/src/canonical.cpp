#include "halfspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "halfspec/graph6.hpp"

namespace halfspec {

namespace {

// Ordered partition of the vertex set; cells are kept in a fixed order that
// depends only on the graph and the individualized prefix.
using Partition = std::vector<std::vector<int>>;

// Refine to the coarsest equitable partition finer than p.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < p.size() && !changed; ++w) {
      VertexSet splitter = 0;
      for (int v : p[w]) splitter |= VertexSet{1} << v;
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (p[x].size() < 2) continue;
        auto& cell = p[x];
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(std::popcount(g.row(v) & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (keyed.front().first == keyed.back().first) continue;
        Partition pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        p.erase(p.begin() + static_cast<long>(x));
        p.insert(p.begin() + static_cast<long>(x), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

bool twins(const Graph& g, int u, int v) {
  const VertexSet mask = ~((VertexSet{1} << u) | (VertexSet{1} << v));
  return (g.row(u) & mask) == (g.row(v) & mask);
}

using Key = std::array<VertexSet, kMaxOrder>;

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Partition p;
    if (n_ == 0) return {};
    p.emplace_back(n_);
    std::iota(p.front().begin(), p.front().end(), 0);
    refine(g_, p);
    std::vector<int> prefix;
    descend(p, prefix);
    return best_perm_;
  }

 private:
  Key key_of(const std::vector<int>& perm) const {
    Key k{};
    for (int u = 0; u < n_; ++u)
      for (VertexSet r = g_.row(u); r; r &= r - 1) k[perm[u]] |= VertexSet{1} << perm[std::countr_zero(r)];
    return k;
  }

  void leaf(const Partition& p) {
    std::vector<int> perm(n_);
    for (std::size_t i = 0; i < p.size(); ++i) perm[p[i][0]] = static_cast<int>(i);
    Key k = key_of(perm);
    if (!have_best_ || k < best_key_) {
      best_key_ = k;
      best_perm_ = std::move(perm);
      have_best_ = true;
    } else if (k == best_key_ && automorphisms_.size() < 64) {
      // gamma maps each vertex to the vertex with the same label in the best leaf.
      std::vector<int> inv(n_);
      for (int v = 0; v < n_; ++v) inv[best_perm_[v]] = v;
      std::vector<int> gamma(n_);
      for (int v = 0; v < n_; ++v) gamma[v] = inv[perm[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbits of the group generated by stored automorphisms fixing prefix.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void descend(const Partition& p, std::vector<int>& prefix) {
    if (static_cast<int>(p.size()) == n_) {
      leaf(p);
      return;
    }
    std::size_t target = 0;
    std::size_t best_size = n_ + 1;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i].size() > 1 && p[i].size() < best_size) {
        best_size = p[i].size();
        target = i;
      }
    std::vector<int> explored;
    for (int v : p[target]) {
      bool skip = std::any_of(explored.begin(), explored.end(), [&](int u) { return twins(g_, u, v); });
      if (!skip && !explored.empty() && !automorphisms_.empty()) {
        auto orb = orbits(prefix);
        skip = std::any_of(explored.begin(), explored.end(), [&](int u) { return orb[u] == orb[v]; });
      }
      if (skip) continue;
      explored.push_back(v);

      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != target) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : p[i])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(g_, child);
      prefix.push_back(v);
      descend(child, prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  Key best_key_{};
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return Search(g).run(); }

Graph canonical_form(const Graph& g) {
  auto perm = canonical_labeling(g);
  return relabel(g, perm);
}

std::string canonical_key(const Graph& g) { return graph6_encode(canonical_form(g)); }

}  // namespace halfspec
