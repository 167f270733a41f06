#include "halfspec/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>

namespace halfspec {

IntPoly charpoly(const Graph& g) {
  const int n = g.order();
  // Descending coefficients of det(xI - M_r), M_r the leading r x r block.
  std::vector<Integer> poly{Integer(1)};
  std::vector<Integer> v, w, toeplitz;
  for (int r = 0; r < n; ++r) {
    toeplitz.assign(r + 2, Integer(0));
    toeplitz[0] = 1;
    toeplitz[1] = 0;  // no loops
    // toeplitz[k + 2] = -R S^k C with R = row r, C = column r, S = M_r.
    const VertexSet col = g.row(r) & prefix_mask(r);
    v.assign(r, Integer(0));
    for (int i = 0; i < r; ++i)
      if ((col >> i) & 1U) v[i] = 1;
    for (int k = 0; k < r; ++k) {
      Integer dot = 0;
      for (int i = 0; i < r; ++i)
        if ((col >> i) & 1U) dot += v[i];
      toeplitz[k + 2] = -dot;
      if (k + 1 == r) break;
      w.assign(r, Integer(0));
      for (int i = 0; i < r; ++i) {
        VertexSet nb = g.row(i) & prefix_mask(r);
        while (nb) {
          const int j = std::countr_zero(nb);
          nb &= nb - 1;
          w[i] += v[j];
        }
      }
      std::swap(v, w);
    }
    std::vector<Integer> next(r + 2, Integer(0));
    for (int i = 0; i <= r + 1; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) {
        if (toeplitz[i - j] == 0) continue;
        mpz_addmul(next[i].get_mpz_t(), toeplitz[i - j].get_mpz_t(), poly[j].get_mpz_t());
      }
    poly = std::move(next);
  }
  return IntPoly(std::vector<Integer>(poly.rbegin(), poly.rend()));
}

Rational determinant(RationalMatrix m) {
  const int n = m.n;
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det *= m(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

namespace {

struct Overflow {};

/// Reduced rational on 64-bit integers; any overflow throws Overflow.
struct SmallQ {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static SmallQ make(__int128 p, __int128 q) {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    __int128 a = p < 0 ? -p : p;
    __int128 b = q;
    while (b) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      p /= a;
      q /= a;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (p > kMax || p < -kMax || q > kMax) throw Overflow{};
    return {static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)};
  }

  bool is_zero() const { return num == 0; }
  int sign() const { return (num > 0) - (num < 0); }
  friend SmallQ operator*(SmallQ a, SmallQ b) {
    return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
  }
  friend SmallQ operator/(SmallQ a, SmallQ b) {
    return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
  }
  friend SmallQ operator+(SmallQ a, SmallQ b) {
    if (a.den == b.den) return make(static_cast<__int128>(a.num) + b.num, a.den);
    return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend SmallQ operator-(SmallQ a, SmallQ b) { return a + SmallQ{-b.num, b.den}; }
};

bool is_zero(const SmallQ& q) { return q.is_zero(); }
int sign_of(const SmallQ& q) { return q.sign(); }
bool is_zero(const Rational& q) { return sgn(q) == 0; }
int sign_of(const Rational& q) { return sgn(q); }

template <class T>
Inertia eliminate(std::vector<T>& m, int n) {
  auto at = [&](int i, int j) -> T& { return m[static_cast<std::size_t>(i) * n + j]; };
  auto sym_swap = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < n; ++j) std::swap(at(a, j), at(b, j));
    for (int i = 0; i < n; ++i) std::swap(at(i, a), at(i, b));
  };
  Inertia out;
  int k = 0;
  while (k < n) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!is_zero(at(i, i))) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      sym_swap(k, piv);
      const T d = at(k, k);
      if (sign_of(d) > 0)
        ++out.pos;
      else
        ++out.neg;
      for (int i = k + 1; i < n; ++i) {
        if (is_zero(at(i, k))) continue;
        const T f = at(i, k) / d;
        for (int j = k + 1; j < n; ++j)
          if (!is_zero(at(k, j))) at(i, j) = at(i, j) - f * at(k, j);
      }
      ++k;
      continue;
    }
    int pi = -1;
    int pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!is_zero(at(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) {
      out.zero += n - k;
      break;
    }
    sym_swap(k, pi);
    sym_swap(k + 1, pj);
    // [[0, b], [b, 0]] has eigenvalues +b and -b.
    ++out.pos;
    ++out.neg;
    const T b = at(k, k + 1);
    for (int i = k + 2; i < n; ++i) {
      const T u = at(i, k) / b;
      const T v = at(i, k + 1) / b;
      if (is_zero(u) && is_zero(v)) continue;
      for (int j = k + 2; j < n; ++j) at(i, j) = at(i, j) - (u * at(k + 1, j) + v * at(k, j));
    }
    k += 2;
  }
  return out;
}

}  // namespace

Inertia inertia(RationalMatrix m) { return eliminate(m.a, m.n); }

Inertia inertia_of_shift(const Graph& g, const Rational& c) {
  const int n = g.order();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    const SmallQ shift = SmallQ::make(-static_cast<__int128>(c.get_num().get_si()), c.get_den().get_si());
    std::vector<SmallQ> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = i == j ? shift : SmallQ{g.adjacent(i, j), 1};
    try {
      return eliminate(m, n);
    } catch (const Overflow&) {
    }
  }
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = i == j ? Rational(-c) : Rational(g.adjacent(i, j) ? 1 : 0);
  return inertia(std::move(m));
}

}  // namespace halfspec
