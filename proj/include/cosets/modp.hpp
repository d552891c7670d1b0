// Arithmetic and small dense linear algebra over a prime field F_p.
// p stays below 2^31 here, so products fit in unsigned 64-bit.
#ifndef COSETS_MODP_HPP_
#define COSETS_MODP_HPP_

#include <cstdint>
#include <vector>

#include "cosets/common.hpp"

namespace cosets {

using u64 = std::uint64_t;

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Fp {
  u64 p;
  explicit Fp(u64 prime) : p(prime) {
    if (!is_prime_u64(p) || p >= (1ULL << 31)) fail("Fp: need a prime below 2^31");
  }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
  u64 mul(u64 a, u64 b) const { return (a % p) * (b % p) % p; }
  u64 neg(u64 a) const { return (p - a % p) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) fail("Fp: division by zero");
    return pow(a, p - 2);
  }
};

// Smallest prime p with p = 1 (mod e), p > 2*sqrt(order), p > min_exceed
// and p not dividing the group order; character data mod such a p lifts
// uniquely.  min_exceed makes room for polynomial interpolation: callers
// pass the class count, which for non-cyclic abelian groups can exceed
// 2*sqrt(order).
inline u64 smallest_splitting_prime(u64 e, u64 order, u64 min_exceed = 0) {
  u64 bound = 1;
  while (bound * bound <= 4 * order) ++bound;  // bound = floor(2*sqrt(order)) + 1
  u64 p = e + 1;
  while (true) {
    if (p >= bound && p > min_exceed && is_prime_u64(p) && order % p != 0) return p;
    p += e;
    if (p > (1ULL << 31)) fail("no usable splitting prime below 2^31");
  }
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

inline u64 primitive_root(const Fp& F) {
  std::vector<u64> qs = prime_factors(F.p - 1);
  for (u64 h = 2; h < F.p; ++h) {
    bool ok = true;
    for (u64 q : qs)
      if (F.pow(h, (F.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return h;
  }
  fail("no primitive root found");
}

// Square root mod p by Tonelli-Shanks; fails if a is not a square.
inline u64 sqrt_mod_p(const Fp& F, u64 a) {
  a %= F.p;
  if (a == 0) return 0;
  if (F.p == 2) return a;
  if (F.pow(a, (F.p - 1) / 2) != 1) fail("sqrt_mod_p: not a quadratic residue");
  if (F.p % 4 == 3) return F.pow(a, (F.p + 1) / 4);
  u64 q = F.p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (F.pow(z, (F.p - 1) / 2) == 1) ++z;
  u64 m = s, c = F.pow(z, q), t = F.pow(a, q), r = F.pow(a, (q + 1) / 2);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = F.mul(tt, tt);
      ++i;
      if (i == m) fail("sqrt_mod_p: lost");
    }
    u64 b = F.pow(c, 1ULL << (m - i - 1));
    m = i;
    c = F.mul(b, b);
    t = F.mul(t, c);
    r = F.mul(r, b);
  }
  return r;
}

using MatP = std::vector<std::vector<u64>>;

inline MatP mat_mul(const Fp& F, const MatP& a, const MatP& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  MatP c(n, std::vector<u64>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      u64 v = a[i][l];
      for (size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + v * b[l][j]) % F.p;
    }
  return c;
}

inline u64 determinant(const Fp& F, MatP m) {
  size_t n = m.size();
  u64 det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = F.neg(det);
    }
    det = F.mul(det, m[col][col]);
    u64 inv = F.inv(m[col][col]);
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      u64 f = F.mul(m[r][col], inv);
      for (size_t c = col; c < n; ++c) m[r][c] = F.sub(m[r][c], F.mul(f, m[col][c]));
    }
  }
  return det;
}

// Basis of the right null space, as column vectors.
inline std::vector<std::vector<u64>> kernel_basis(const Fp& F, MatP m) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    u64 inv = F.inv(m[r][c]);
    for (size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<u64> v(cols, 0);
    v[free_c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.neg(m[i][free_c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve B * X = Y where the n x d matrix B has full column rank; X is d x m.
// Used to restrict an operator to an invariant subspace spanned by B.
inline MatP solve_in_basis(const Fp& F, MatP b, MatP y) {
  size_t n = b.size(), d = b.empty() ? 0 : b[0].size();
  size_t m = y.empty() ? 0 : y[0].size();
  if (y.size() != n) fail("solve_in_basis: shape mismatch");
  size_t r = 0;
  for (size_t c = 0; c < d; ++c) {
    size_t piv = r;
    while (piv < n && b[piv][c] == 0) ++piv;
    if (piv == n) fail("solve_in_basis: basis not of full column rank");
    std::swap(b[piv], b[r]);
    std::swap(y[piv], y[r]);
    u64 inv = F.inv(b[r][c]);
    for (size_t j = 0; j < d; ++j) b[r][j] = F.mul(b[r][j], inv);
    for (size_t j = 0; j < m; ++j) y[r][j] = F.mul(y[r][j], inv);
    for (size_t i = 0; i < n; ++i) {
      if (i == r || b[i][c] == 0) continue;
      u64 f = b[i][c];
      for (size_t j = 0; j < d; ++j) b[i][j] = F.sub(b[i][j], F.mul(f, b[r][j]));
      for (size_t j = 0; j < m; ++j) y[i][j] = F.sub(y[i][j], F.mul(f, y[r][j]));
    }
    ++r;
  }
  // rows beyond the pivots must have come out zero, or B*X = Y is unsolvable
  for (size_t i = r; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      if (y[i][j] != 0) fail("solve_in_basis: inconsistent system (subspace not invariant)");
  MatP x(d, std::vector<u64>(m, 0));
  for (size_t i = 0; i < d; ++i) x[i] = y[i];
  return x;
}

// Characteristic polynomial det(xI - M), coefficients low-to-high, by
// evaluating the determinant at deg+1 points and interpolating. Needs
// p > deg; the splitting prime is chosen with the class count in mind.
inline std::vector<u64> char_poly(const Fp& F, const MatP& m) {
  size_t n = m.size();
  if (F.p <= n) fail("char_poly: field too small to interpolate");
  std::vector<u64> xs(n + 1), ys(n + 1);
  for (size_t k = 0; k <= n; ++k) {
    xs[k] = k;
    MatP a = m;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) a[i][j] = F.neg(a[i][j]);
      a[i][i] = F.add(a[i][i], k);
    }
    ys[k] = determinant(F, std::move(a));
  }
  // Lagrange interpolation on the points (xs, ys)
  std::vector<u64> poly(n + 1, 0);
  for (size_t k = 0; k <= n; ++k) {
    std::vector<u64> basis{1};  // product of (x - xs[j]) / (xs[k] - xs[j])
    u64 denom = 1;
    for (size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis.push_back(0);
      for (size_t d = basis.size(); d-- > 1;)
        basis[d] = F.add(F.mul(basis[d], F.neg(xs[j])), basis[d - 1]);
      basis[0] = F.mul(basis[0], F.neg(xs[j]));
      denom = F.mul(denom, F.sub(xs[k], xs[j]));
    }
    u64 scale = F.mul(ys[k], F.inv(denom));
    for (size_t d = 0; d <= n; ++d) poly[d] = F.add(poly[d], F.mul(basis[d], scale));
  }
  return poly;
}

// All roots in F_p by direct scan (p is always small enough for this).
inline std::vector<u64> poly_roots(const Fp& F, const std::vector<u64>& poly) {
  std::vector<u64> roots;
  for (u64 x = 0; x < F.p; ++x) {
    u64 v = 0;
    for (size_t d = poly.size(); d-- > 0;) v = (v * x + poly[d]) % F.p;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace cosets

#endif
