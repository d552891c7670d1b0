// Exact arithmetic in cyclotomic fields.
//
// A value carries its own conductor n and a sparse list of terms c * z^e,
// z = exp(2*pi*i/n), kept canonical modulo the n-th cyclotomic polynomial
// (so exponents stay below phi(n) and representations are unique). Binary
// operations embed into the lcm conductor. Keeping conductors natural (the
// order of the group element a value belongs to) is what keeps products
// cheap; nothing here ever needs the dense joint field until two values of
// coprime large order actually meet.
#ifndef COSETS_CYCLOTOMIC_HPP_
#define COSETS_CYCLOTOMIC_HPP_

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cosets/common.hpp"
#include "cosets/rational.hpp"

namespace cosets {

inline unsigned long long euler_phi(unsigned long long n) {
  unsigned long long r = n;
  for (unsigned long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  if (n > 1) r -= r / n;
  return r;
}

inline std::vector<unsigned long long> divisors(unsigned long long n) {
  std::vector<unsigned long long> d;
  for (unsigned long long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

namespace detail {

// Exact quotient of integer polynomials (low-to-high coefficients); the
// division must come out even or something upstream is broken.
inline std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num,
                                             const std::vector<BigInt>& den) {
  if (den.empty() || den.back() == 0) fail("poly_divide_exact: bad divisor");
  if (num.size() < den.size()) fail("poly_divide_exact: degree underflow");
  std::vector<BigInt> q(num.size() - den.size() + 1);
  for (size_t i = q.size(); i-- > 0;) {
    BigInt c = num[i + den.size() - 1];
    if (c % den.back() != 0) fail("poly_divide_exact: inexact division");
    c /= den.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const BigInt& c : num)
    if (c != 0) fail("poly_divide_exact: nonzero remainder");
  return q;
}

struct ConductorCtx {
  unsigned long long n = 1;
  unsigned long long phi = 1;
  std::vector<BigInt> poly;                  // n-th cyclotomic polynomial, monic
  std::vector<std::vector<BigInt>> rows;     // rows[k-phi]: z^k in the power basis
  std::mutex rows_mutex;

  // z^k as integer coordinates over 1, z, ..., z^(phi-1); grows the row cache
  // on demand (k < n).
  const std::vector<BigInt>& row(unsigned long long k) {
    std::lock_guard<std::mutex> lock(rows_mutex);
    while (rows.size() + phi <= k) {
      std::vector<BigInt> next(phi);
      if (rows.empty()) {
        for (unsigned long long i = 0; i < phi; ++i) next[i] = -poly[i];
      } else {
        const std::vector<BigInt>& prev = rows.back();
        // multiply by z, then fold the overflowing z^phi term back in
        BigInt top = prev[phi - 1];
        for (unsigned long long i = phi; i-- > 1;) next[i] = prev[i - 1];
        next[0] = 0;
        if (top != 0)
          for (unsigned long long i = 0; i < phi; ++i) next[i] -= top * poly[i];
      }
      rows.push_back(std::move(next));
    }
    return rows[k - phi];
  }
};

inline ConductorCtx& conductor_ctx(unsigned long long n) {
  static std::mutex m;
  static std::map<unsigned long long, std::unique_ptr<ConductorCtx>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e; filling the
  // cache in ascending divisor order keeps every division a table lookup.
  for (unsigned long long d : divisors(n)) {
    if (cache.count(d)) continue;
    std::vector<BigInt> p(d + 1);
    p[0] = -1;
    p[d] = 1;
    for (unsigned long long e : divisors(d))
      if (e != d) p = poly_divide_exact(std::move(p), cache.at(e)->poly);
    auto ctx = std::make_unique<ConductorCtx>();
    ctx->n = d;
    ctx->phi = euler_phi(d);
    ctx->poly = std::move(p);
    if (ctx->poly.size() != ctx->phi + 1 || ctx->poly.back() != 1)
      fail("cyclotomic polynomial of order " + std::to_string(d) + " came out wrong");
    cache.emplace(d, std::move(ctx));
  }
  return *cache.at(n);
}

}  // namespace detail

// Phi_n as integer coefficients, constant term first.
inline const std::vector<BigInt>& cyclotomic_polynomial(unsigned long long n) {
  return detail::conductor_ctx(n).poly;
}

class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& r) {  // NOLINT(runtime/explicit): rationals embed
    if (!r.is_zero()) terms_.emplace_back(0, r);
  }
  Cyclotomic(long long v) : Cyclotomic(Rational(v)) {}  // NOLINT(runtime/explicit)

  static Cyclotomic root_of_unity(unsigned long long n, long long k) {
    Cyclotomic c;
    c.n_ = n;
    long long e = ((k % static_cast<long long>(n)) + static_cast<long long>(n)) %
                  static_cast<long long>(n);
    c.terms_.emplace_back(static_cast<unsigned long long>(e), Rational(1));
    c.canonicalize();
    return c;
  }

  // terms as (exponent, coefficient) at conductor n, exponents arbitrary mod n
  static Cyclotomic from_terms(unsigned long long n,
                               std::vector<std::pair<unsigned long long, Rational>> terms) {
    Cyclotomic c;
    c.n_ = n;
    c.terms_ = std::move(terms);
    for (auto& t : c.terms_) t.first %= n;
    c.canonicalize();
    return c;
  }

  unsigned long long conductor() const { return n_; }
  const std::vector<std::pair<unsigned long long, Rational>>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Rational rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) fail("cyclotomic value is not rational");
    return terms_[0].second;
  }
  bool is_integer() const { return is_rational() && rational_value().is_integer(); }

  Cyclotomic embedded(unsigned long long m) const {
    if (m % n_ != 0) fail("cyclotomic embed: conductor mismatch");
    if (m == n_) return *this;
    Cyclotomic c;
    c.n_ = m;
    unsigned long long scale = m / n_;
    for (const auto& t : terms_) c.terms_.emplace_back(t.first * scale, t.second);
    c.canonicalize();
    return c;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long long m = lcm_u64(a.n_, b.n_);
    Cyclotomic x = a.embedded(m), y = b.embedded(m);
    Cyclotomic r;
    r.n_ = m;
    r.terms_ = merge_terms(x.terms_, y.terms_, false);
    return r;  // sums of canonical forms stay canonical
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long long m = lcm_u64(a.n_, b.n_);
    Cyclotomic x = a.embedded(m), y = b.embedded(m);
    Cyclotomic r;
    r.n_ = m;
    r.terms_ = merge_terms(x.terms_, y.terms_, true);
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long long m = lcm_u64(a.n_, b.n_);
    Cyclotomic x = a.embedded(m), y = b.embedded(m);
    Cyclotomic r;
    r.n_ = m;
    std::map<unsigned long long, Rational> acc;
    for (const auto& s : x.terms_)
      for (const auto& t : y.terms_) {
        unsigned long long e = (s.first + t.first) % m;
        auto [it, fresh] = acc.emplace(e, s.second * t.second);
        if (!fresh) it->second = it->second + s.second * t.second;
      }
    for (auto& kv : acc)
      if (!kv.second.is_zero()) r.terms_.emplace_back(kv.first, kv.second);
    r.canonicalize();
    return r;
  }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& t : r.terms_) t.second = Rational(0) - t.second;
    return r;
  }

  Cyclotomic conj() const {
    Cyclotomic r;
    r.n_ = n_;
    for (const auto& t : terms_)
      r.terms_.emplace_back(t.first == 0 ? 0 : n_ - t.first, t.second);
    r.canonicalize();
    return r;
  }

  Cyclotomic abs_square() const { return *this * conj(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Deterministic total order for sorting; refines equality, nothing more.
  friend bool value_less(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long long m = lcm_u64(a.n_, b.n_);
    Cyclotomic x = a.embedded(m), y = b.embedded(m);
    auto pair_less = [](const std::pair<unsigned long long, Rational>& s,
                        const std::pair<unsigned long long, Rational>& t) {
      if (s.first != t.first) return s.first < t.first;
      return s.second < t.second;
    };
    return std::lexicographical_compare(x.terms_.begin(), x.terms_.end(), y.terms_.begin(),
                                        y.terms_.end(), pair_less);
  }

  // "0", "5", "-2/3", "z12^5-z12^3+1/2" (z<n> is the primitive n-th root)
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = terms_.size(); i-- > 0;) {  // highest exponent first
      const auto& [e, c] = terms_[i];
      std::string piece;
      if (e == 0) {
        piece = c.str();
      } else {
        std::string mono = "z" + std::to_string(n_) + (e == 1 ? "" : "^" + std::to_string(e));
        if (c == Rational(1)) piece = mono;
        else if (c == Rational(-1)) piece = "-" + mono;
        else piece = c.str() + "*" + mono;
      }
      if (!out.empty() && piece[0] != '-') out += "+";
      out += piece;
    }
    return out;
  }

 private:
  static std::vector<std::pair<unsigned long long, Rational>> merge_terms(
      const std::vector<std::pair<unsigned long long, Rational>>& a,
      const std::vector<std::pair<unsigned long long, Rational>>& b, bool subtract) {
    std::vector<std::pair<unsigned long long, Rational>> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        Rational c = subtract ? Rational(0) - b[j].second : b[j].second;
        out.emplace_back(b[j].first, c);
        ++j;
      } else {
        Rational c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
        if (!c.is_zero()) out.emplace_back(a[i].first, c);
        ++i;
        ++j;
      }
    }
    return out;
  }

  void canonicalize() {
    if (n_ == 0) fail("cyclotomic: zero conductor");
    std::map<unsigned long long, Rational> acc;
    for (auto& t : terms_) {
      unsigned long long e = t.first % n_;
      auto [it, fresh] = acc.emplace(e, t.second);
      if (!fresh) it->second = it->second + t.second;
    }
    unsigned long long phi = detail::conductor_ctx(n_).phi;
    detail::ConductorCtx& ctx = detail::conductor_ctx(n_);
    // fold exponents phi..n-1 down into the power basis, highest first
    while (!acc.empty()) {
      auto last = std::prev(acc.end());
      if (last->first < phi) break;
      unsigned long long e = last->first;
      Rational c = last->second;
      acc.erase(last);
      if (c.is_zero()) continue;
      const std::vector<BigInt>& row = ctx.row(e);
      for (unsigned long long i = 0; i < phi; ++i) {
        if (row[i] == 0) continue;
        Rational add = c * Rational(row[i]);
        auto [it, fresh] = acc.emplace(i, add);
        if (!fresh) it->second = it->second + add;
      }
    }
    terms_.clear();
    for (auto& kv : acc)
      if (!kv.second.is_zero()) terms_.emplace_back(kv.first, kv.second);
  }

  unsigned long long n_ = 1;
  // sorted by exponent; exponents < phi(n); no zero coefficients
  std::vector<std::pair<unsigned long long, Rational>> terms_;
};

}  // namespace cosets

#endif
