#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "halfspec/graph.hpp"

namespace halfspec {

/// Syntax or range error in a graph expression; offset is the byte position.
class ExprError : public std::invalid_argument {
 public:
  ExprError(std::size_t offset, const std::string& message)
      : std::invalid_argument("at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/**
 * Graph expression tree.
 *
 * Leaves: K(n) complete, E(n) edgeless, B(s,t) complete bipartite, P(n) path,
 * C(n) cycle. Nodes: Union, Join, Complement, KJoin(k, a) for k∘a.
 */
struct GraphExpr {
  enum class Kind { Complete, Empty, Bipartite, Path, Cycle, Union, Join, Complement, KJoin };

  Kind kind = Kind::Empty;
  int a = 0;  // leaf size, first bipartite part, or k for KJoin
  int b = 0;  // second bipartite part
  std::vector<GraphExpr> children;

  static GraphExpr leaf(Kind kind, int a, int b = 0);
  static GraphExpr unite(GraphExpr l, GraphExpr r);
  static GraphExpr join(GraphExpr l, GraphExpr r);
  static GraphExpr complement(GraphExpr e);
  static GraphExpr kjoin(int k, GraphExpr e);

  /// Structural form, e.g. "Join(Union(E(2),K(2)),E(3))".
  std::string to_string() const;

  friend bool operator==(const GraphExpr&, const GraphExpr&) = default;
};

/**
 * Grammar, loosest to tightest:
 *
 *   expr    := term ('+' term)*          union
 *   term    := unary ('*' unary)*        join
 *   unary   := '~' unary | INT '@' unary | primary
 *   primary := 'K' INT | 'E' INT | 'B' INT ',' INT | 'P' INT | 'C' INT | '(' expr ')'
 *
 * Blanks between tokens are ignored.
 */
GraphExpr parse_expr(std::string_view text);

/// Throws OrderOverflow when the result would exceed 64 vertices.
Graph eval_expr(const GraphExpr& e);

/// Vertex count of the expression without building it.
long long expr_order(const GraphExpr& e);

}  // namespace halfspec
