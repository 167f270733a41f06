#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace halfspec {

/// Set of vertices of a graph with at most 64 vertices; bit i is vertex i.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

/// Thrown when a construction would exceed kMaxOrder vertices.
class OrderOverflow : public std::length_error {
 public:
  explicit OrderOverflow(const std::string& what) : std::length_error(what) {}
};

inline constexpr VertexSet prefix_mask(int n) {
  return n >= 64 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

/**
 * Simple undirected graph on at most 64 vertices.
 *
 * Row i of the adjacency is a 64-bit word holding the neighbours of vertex i.
 * The class keeps the rows symmetric, loop-free and clean above order().
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return order_; }
  VertexSet row(int v) const { return adj_[v]; }
  VertexSet vertices() const { return prefix_mask(order_); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.order_ != b.order_) return false;
    for (int i = 0; i < a.order_; ++i)
      if (a.adj_[i] != b.adj_[i]) return false;
    return true;
  }

 private:
  int order_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

// Named graphs.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int s, int t);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_multipartite(std::span<const int> parts);

// Construction algebra. All throw OrderOverflow past kMaxOrder.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
/// Join of k disjoint copies of g (k∘G).
Graph kfold_join(int k, const Graph& g);
/// Union of k disjoint copies of g (kG).
Graph kfold_union(int k, const Graph& g);

/// Subgraph induced on s; vertices keep their relative order.
Graph induced_subgraph(const Graph& g, VertexSet s);
/// Graph h with h.adjacent(perm[u], perm[v]) == g.adjacent(u, v).
Graph relabel(const Graph& g, std::span<const int> perm);

bool is_connected(const Graph& g);
/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
VertexSet isolated_vertices(const Graph& g);
bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);

/// g = G_1 ∨ ... ∨ G_k where the complements of the G_i are the components
/// of the complement of g.
struct JoinDecomposition {
  struct Slot {
    int factor;
    int local;
  };
  std::vector<Graph> factors;
  std::vector<VertexSet> factor_vertices;  // original vertex set per factor
  std::vector<Slot> vertex_partition;      // original vertex -> slot
};

/// Factors are ordered by (order, canonical graph6 key) and, for ties, by
/// smallest original vertex.
JoinDecomposition complement_components(const Graph& g);

/// Joins the factors back and maps local vertices through vertex_partition.
Graph rejoin(const JoinDecomposition& d);

}  // namespace halfspec
