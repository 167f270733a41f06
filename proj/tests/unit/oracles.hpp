#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <random>
#include <vector>

#include "halfspec/graph.hpp"
#include "halfspec/rational.hpp"

namespace oracle {

using halfspec::Graph;
using halfspec::Integer;

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline Eigen::MatrixXd adjacency(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if (g.adjacent(i, j)) a(i, j) = 1;
  return a;
}

// Descending.
inline std::vector<double> eigenvalues(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency(g), Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + g.order());
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

// Fraction-free Bareiss elimination on an integer matrix.
inline Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// det(xI - A) at an integer point.
inline Integer charpoly_at(const Graph& g, long x) {
  std::vector<std::vector<Integer>> m(g.order(), std::vector<Integer>(g.order()));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) m[i][j] = (i == j ? x : 0) - (g.adjacent(i, j) ? 1 : 0);
  return bareiss_det(m);
}

// Induced embedding by trying every injective map.
inline bool brute_contains(const Graph& host, const Graph& pat) {
  const int n = host.order(), k = pat.order();
  if (k > n) return false;
  std::vector<int> img(k);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = host.adjacent(v, img[j]) == pat.adjacent(i, j);
      if (!ok) continue;
      used[v] = true;
      img[i] = v;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace oracle
