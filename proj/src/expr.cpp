#include "halfspec/expr.hpp"

#include <cctype>

namespace halfspec {

GraphExpr GraphExpr::leaf(Kind kind, int a, int b) {
  GraphExpr e;
  e.kind = kind;
  e.a = a;
  e.b = b;
  return e;
}

GraphExpr GraphExpr::unite(GraphExpr l, GraphExpr r) {
  GraphExpr e;
  e.kind = Kind::Union;
  e.children.push_back(std::move(l));
  e.children.push_back(std::move(r));
  return e;
}

GraphExpr GraphExpr::join(GraphExpr l, GraphExpr r) {
  GraphExpr e = unite(std::move(l), std::move(r));
  e.kind = Kind::Join;
  return e;
}

GraphExpr GraphExpr::complement(GraphExpr c) {
  GraphExpr e;
  e.kind = Kind::Complement;
  e.children.push_back(std::move(c));
  return e;
}

GraphExpr GraphExpr::kjoin(int k, GraphExpr c) {
  GraphExpr e;
  e.kind = Kind::KJoin;
  e.a = k;
  e.children.push_back(std::move(c));
  return e;
}

std::string GraphExpr::to_string() const {
  switch (kind) {
    case Kind::Complete: return "K(" + std::to_string(a) + ")";
    case Kind::Empty: return "E(" + std::to_string(a) + ")";
    case Kind::Bipartite: return "B(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::Path: return "P(" + std::to_string(a) + ")";
    case Kind::Cycle: return "C(" + std::to_string(a) + ")";
    case Kind::Union: return "Union(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case Kind::Join: return "Join(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case Kind::Complement: return "Complement(" + children[0].to_string() + ")";
    case Kind::KJoin: return "KJoin(" + std::to_string(a) + "," + children[0].to_string() + ")";
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphExpr parse() {
    GraphExpr e = expr();
    skip_blanks();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ExprError(pos_, msg); }

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_blanks();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  int integer() {
    if (!at_digit()) fail("expected an integer");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  GraphExpr expr() {
    GraphExpr e = term();
    while (accept('+')) e = GraphExpr::unite(std::move(e), term());
    return e;
  }

  GraphExpr term() {
    GraphExpr e = unary();
    while (accept('*')) e = GraphExpr::join(std::move(e), unary());
    return e;
  }

  GraphExpr unary() {
    if (accept('~')) return GraphExpr::complement(unary());
    if (at_digit()) {
      const std::size_t start = pos_;
      const int k = integer();
      if (!accept('@')) fail("expected '@' after repeat count");
      if (k < 1) throw ExprError(start, "k-fold join needs k >= 1");
      return GraphExpr::kjoin(k, unary());
    }
    return primary();
  }

  GraphExpr primary() {
    skip_blanks();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GraphExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    ++pos_;
    using K = GraphExpr::Kind;
    switch (c) {
      case 'K': return GraphExpr::leaf(K::Complete, integer());
      case 'E': return GraphExpr::leaf(K::Empty, integer());
      case 'P': {
        const int n = integer();
        if (n < 1) throw ExprError(start, "P needs at least 1 vertex");
        return GraphExpr::leaf(K::Path, n);
      }
      case 'C': {
        const int n = integer();
        if (n < 3) throw ExprError(start, "C needs at least 3 vertices");
        return GraphExpr::leaf(K::Cycle, n);
      }
      case 'B': {
        const int s = integer();
        if (!accept(',')) fail("expected ',' in B(s,t)");
        const int t = integer();
        if (s < 1 || t < 1) throw ExprError(start, "B parts must be at least 1");
        return GraphExpr::leaf(K::Bipartite, s, t);
      }
      default:
        pos_ = start;
        fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GraphExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

long long expr_order(const GraphExpr& e) {
  using K = GraphExpr::Kind;
  switch (e.kind) {
    case K::Complete:
    case K::Empty:
    case K::Path:
    case K::Cycle: return e.a;
    case K::Bipartite: return static_cast<long long>(e.a) + e.b;
    case K::Union:
    case K::Join: return expr_order(e.children[0]) + expr_order(e.children[1]);
    case K::Complement: return expr_order(e.children[0]);
    case K::KJoin: return e.a * expr_order(e.children[0]);
  }
  return 0;
}

Graph eval_expr(const GraphExpr& e) {
  const long long n = expr_order(e);
  if (n > kMaxOrder)
    throw OrderOverflow("expression has " + std::to_string(n) + " vertices; the cap is 64");
  using K = GraphExpr::Kind;
  switch (e.kind) {
    case K::Complete: return complete_graph(e.a);
    case K::Empty: return empty_graph(e.a);
    case K::Bipartite: return complete_bipartite(e.a, e.b);
    case K::Path: return path_graph(e.a);
    case K::Cycle: return cycle_graph(e.a);
    case K::Union: return disjoint_union(eval_expr(e.children[0]), eval_expr(e.children[1]));
    case K::Join: return join(eval_expr(e.children[0]), eval_expr(e.children[1]));
    case K::Complement: return complement(eval_expr(e.children[0]));
    case K::KJoin: return kfold_join(e.a, eval_expr(e.children[0]));
  }
  return {};
}

}  // namespace halfspec
