#include "halfspec/poly.hpp"

#include <stdexcept>

namespace halfspec {

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(long r) { return IntPoly{-r, 1}; }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  // Horner on b^d p(a/b); b > 0 so the sign is preserved.
  if (is_zero()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer h = coeffs_.back();
  Integer bp = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    bp *= b;
    h = h * a + coeffs_[i] * bp;
  }
  return sgn(h);
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  if (out.empty()) out.push_back("0");
  return out;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> r(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[j].get_mpz_t());
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

IntPoly IntPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("IntPoly::pow: negative exponent");
  IntPoly result{1};
  IntPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const Integer lb = b.leading();
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  int steps = 0;
  for (int d = a.degree(); d >= db; --d) {
    const Integer lr = r[d];
    // r <- lb * r - lr * x^(d-db) * b
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[d - db + i] -= lr * b.coeffs()[i];
    ++steps;
  }
  // Each step multiplied by lb; the wanted scale is |lb|^steps.
  if (lb < 0 && (steps % 2 == 1))
    for (auto& c : r) c = -c;
  return IntPoly(std::move(r));
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_divide: divisor degree too large");
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    if (!mpz_divisible_p(r[d].get_mpz_t(), lb.get_mpz_t()))
      throw std::domain_error("exact_divide: not divisible over the integers");
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[d].get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) r[d - db + i] -= c * b.coeffs()[i];
    q[d - db] = c;
  }
  for (const auto& c : r)
    if (c != 0) throw std::domain_error("exact_divide: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = signed_pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() < 1) return p.primitive_part();
  IntPoly g = gcd(p, p.derivative());
  return exact_divide(p.primitive_part(), g).primitive_part();
}

int root_order_at(const IntPoly& p, long r) {
  if (p.is_zero()) throw std::domain_error("root_order_at: zero polynomial");
  int m = 0;
  IntPoly q = p;
  const IntPoly lin = IntPoly::linear_root(r);
  while (q.degree() >= 1 && q.eval(Integer(r)) == 0) {
    q = exact_divide(q, lin);
    ++m;
  }
  return m;
}

}  // namespace halfspec
