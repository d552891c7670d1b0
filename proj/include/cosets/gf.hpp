// Tiny finite fields F_q for the q-parameterized group families.
//
// Elements are indexed 0..q-1: the element sum_i c_i t^i has index
// sum_i c_i p^i (so 0 is zero, 1 is one, p is t). Extension fields use fixed
// irreducible polynomials:
//   F4  = F2[t]/(t^2+t+1)
//   F8  = F2[t]/(t^3+t+1)
//   F9  = F3[t]/(t^2+1)
//   F27 = F3[t]/(t^3-t+1)
// Any prime q up to 64 is accepted as well.
#ifndef COSETS_GF_HPP_
#define COSETS_GF_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cosets/common.hpp"

namespace cosets {

class GaloisField {
 public:
  static const GaloisField& get(unsigned q) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<GaloisField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end())
      it = cache.emplace(q, std::unique_ptr<GaloisField>(new GaloisField(q))).first;
    return *it->second;
  }

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

  unsigned inv(unsigned a) const {
    if (a == 0) fail("field inverse of zero");
    return inv_[a];
  }

  unsigned pow(unsigned a, unsigned long long k) const {
    unsigned r = 1;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  unsigned frobenius(unsigned a) const { return pow(a, p_); }

  // Smallest element index generating the multiplicative group.
  unsigned primitive() const { return primitive_; }

 private:
  explicit GaloisField(unsigned q) : q_(q) {
    static const struct {
      unsigned q, p, f;
      unsigned reduction[3];  // x^f == reduction (coefficients low to high)
    } kExtensions[] = {
        {4, 2, 2, {1, 1, 0}},   // t^2 = t + 1
        {8, 2, 3, {1, 1, 0}},   // t^3 = t + 1
        {9, 3, 2, {2, 0, 0}},   // t^2 = -1
        {27, 3, 3, {2, 1, 0}},  // t^3 = t - 1
    };
    std::vector<unsigned> red;
    bool found = false;
    for (const auto& e : kExtensions)
      if (e.q == q) {
        p_ = e.p;
        f_ = e.f;
        red.assign(e.reduction, e.reduction + e.f);
        found = true;
      }
    if (!found) {
      if (q < 2 || q > 64) fail("unsupported field size " + std::to_string(q));
      for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) fail("unsupported field size " + std::to_string(q));
      p_ = q;
      f_ = 1;
    }

    auto coeffs = [this](unsigned idx) {
      std::vector<unsigned> c(f_);
      for (unsigned i = 0; i < f_; ++i, idx /= p_) c[i] = idx % p_;
      return c;
    };
    auto index = [this](const std::vector<unsigned>& c) {
      unsigned idx = 0;
      for (unsigned i = f_; i-- > 0;) idx = idx * p_ + c[i];
      return idx;
    };

    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
      auto ca = coeffs(a);
      std::vector<unsigned> cn(f_);
      for (unsigned i = 0; i < f_; ++i) cn[i] = (p_ - ca[i]) % p_;
      neg_[a] = index(cn);
      for (unsigned b = 0; b < q_; ++b) {
        auto cb = coeffs(b);
        std::vector<unsigned> cs(f_);
        for (unsigned i = 0; i < f_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
        add_[a * q_ + b] = index(cs);
        // Polynomial product, reduced degree by degree from the top.
        std::vector<unsigned> prod(2 * f_ - 1, 0);
        for (unsigned i = 0; i < f_; ++i)
          for (unsigned j = 0; j < f_; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        for (unsigned d = 2 * f_ - 2; d >= f_ && d < prod.size(); --d) {
          unsigned lead = prod[d];
          if (lead) {
            prod[d] = 0;
            for (unsigned i = 0; i < f_; ++i)
              prod[d - f_ + i] = (prod[d - f_ + i] + lead * red[i]) % p_;
          }
          if (d == f_) break;
        }
        prod.resize(f_);
        mul_[a * q_ + b] = index(prod);
      }
    }
    inv_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a)
      for (unsigned b = 1; b < q_; ++b)
        if (mul(a, b) == 1) {
          inv_[a] = b;
          break;
        }
    primitive_ = 0;
    for (unsigned a = 2; a < q_ && !primitive_; ++a) {
      unsigned ord = 1, x = a;
      while (x != 1) {
        x = mul(x, a);
        ++ord;
      }
      if (ord == q_ - 1) primitive_ = a;
    }
    if (q_ == 2) primitive_ = 1;
    if (!primitive_) fail("no primitive element found");
  }

  unsigned q_, p_ = 0, f_ = 0, primitive_ = 0;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

}  // namespace cosets

#endif
