// Exact character tables of finite groups.
//
// The table is computed from the class algebra: structure-constant matrices
// are simultaneously diagonalized over a prime field F_p with p = 1 mod
// exp(G) and p > 2*sqrt(|G|), degrees and values are recovered mod p, and
// every value is lifted exactly into the cyclotomic field of the class
// element's order via a discrete Fourier transform over its power classes.
// The constructor verifies the finished table against the (column form of
// the) orthogonality relations with exact arithmetic before returning; a
// table object that exists is a table that has been checked.
//
// Row order: the trivial character first, then ascending degree, ties broken
// by the lexicographic order on exact values. That order is reproducible
// bit-for-bit, which the I/O and report layers rely on.
#ifndef COSETS_CHAR_TABLE_HPP_
#define COSETS_CHAR_TABLE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cosets/class_data.hpp"
#include "cosets/common.hpp"
#include "cosets/cyclotomic.hpp"
#include "cosets/modp.hpp"
#include "cosets/perm_group.hpp"

namespace cosets {

class CharTable {
 public:
  explicit CharTable(ClassData cd) : cd_(std::move(cd)) {
    const std::uint32_t t = cd_.num_classes();
    const u64 n = cd_.group().order();
    const u64 e = cd_.exponent();
    prime_ = smallest_splitting_prime(e, n, t);
    Fp F(prime_);
    const u64 z = F.pow(primitive_root(F), (prime_ - 1) / e);

    std::vector<MatP> mats(t);
    for (std::uint32_t i = 0; i < t; ++i) {
      auto raw = cd_.class_matrix(i);
      mats[i].assign(t, std::vector<u64>(t, 0));
      for (std::uint32_t j = 0; j < t; ++j)
        for (std::uint32_t k = 0; k < t; ++k) mats[i][j][k] = raw[j][k] % prime_;
    }

    // Split F_p^t into the common eigenlines of all class matrices. The
    // class algebra is commutative and semisimple (p does not divide |G|),
    // so refinement must end with t one-dimensional pieces.
    std::vector<MatP> spaces;
    {
      MatP id(t, std::vector<u64>(t, 0));
      for (std::uint32_t i = 0; i < t; ++i) id[i][i] = 1;
      spaces.push_back(std::move(id));
    }
    for (std::uint32_t i = 1; i < t; ++i) {
      std::vector<MatP> next;
      for (MatP& b : spaces) {
        size_t dim = b[0].size();
        if (dim == 1) {
          next.push_back(std::move(b));
          continue;
        }
        MatP r = solve_in_basis(F, b, mat_mul(F, mats[i], b));
        std::vector<u64> roots = poly_roots(F, char_poly(F, r));
        size_t claimed = 0;
        for (u64 w : roots) {
          MatP rw = r;
          for (size_t d = 0; d < dim; ++d) rw[d][d] = F.sub(rw[d][d], w);
          std::vector<std::vector<u64>> ker = kernel_basis(F, std::move(rw));
          if (ker.empty()) continue;
          MatP k(dim, std::vector<u64>(ker.size()));
          for (size_t c = 0; c < ker.size(); ++c)
            for (size_t d = 0; d < dim; ++d) k[d][c] = ker[c][d];
          next.push_back(mat_mul(F, b, k));
          claimed += ker.size();
        }
        if (claimed != dim) fail("class matrix eigenspace refinement lost dimensions");
      }
      spaces = std::move(next);
    }
    if (spaces.size() != t) fail("class matrices split into " + std::to_string(spaces.size()) +
                                 " eigenlines, expected " + std::to_string(t));

    // Central character per eigenline, scaled so the identity class reads 1.
    std::vector<std::vector<u64>> omegas;
    omegas.reserve(t);
    for (const MatP& b : spaces) {
      if (b[0].size() != 1) fail("eigenline of dimension > 1 survived refinement");
      std::vector<u64> w(t);
      for (std::uint32_t k = 0; k < t; ++k) w[k] = b[k][0];
      if (w[0] == 0) fail("central character vanishes on the identity class");
      u64 scale = F.inv(w[0]);
      for (auto& v : w) v = F.mul(v, scale);
      omegas.push_back(std::move(w));
    }

    std::vector<u64> csize_mod(t), csize_inv(t);
    std::vector<std::uint32_t> inv_class(t);
    for (std::uint32_t k = 0; k < t; ++k) {
      csize_mod[k] = cd_.size(k) % prime_;
      csize_inv[k] = F.inv(csize_mod[k]);
      inv_class[k] = cd_.inverse_class(k);
    }

    // Degrees: 1/chi(1)^2 = (1/|G|) sum_k omega_k omega_{k^-1} / |C_k|;
    // the true degree is the square root below p/2.
    degrees_.resize(t);
    std::vector<std::vector<u64>> chi_mod(t, std::vector<u64>(t));
    for (std::uint32_t r = 0; r < t; ++r) {
      u64 s = 0;
      for (std::uint32_t k = 0; k < t; ++k)
        s = F.add(s, F.mul(F.mul(omegas[r][k], omegas[r][inv_class[k]]), csize_inv[k]));
      if (s == 0) fail("degree formula degenerated");
      u64 d = sqrt_mod_p(F, F.mul(n % prime_, F.inv(s)));
      if (d > prime_ - d) d = prime_ - d;
      if (d == 0 || d * d > n) fail("implausible character degree");
      degrees_[r] = d;
      for (std::uint32_t k = 0; k < t; ++k)
        chi_mod[r][k] = F.mul(F.mul(d % prime_, omegas[r][k]), csize_inv[k]);
    }

    // Exact lift. chi(g) = sum_j m_j zeta^j where m_j is the multiplicity of
    // the eigenvalue zeta^j of the representing matrix at g; the m_j come
    // out of a DFT over the power classes of g and must be small integers.
    std::vector<std::vector<std::uint32_t>> power_classes(t);
    for (std::uint32_t k = 0; k < t; ++k) {
      unsigned nk = cd_.order_of(k);
      power_classes[k].resize(nk);
      for (unsigned a = 0; a < nk; ++a) power_classes[k][a] = cd_.power_class(k, a);
    }
    rows_.assign(t, std::vector<Cyclotomic>(t));
    for (std::uint32_t r = 0; r < t; ++r) {
      for (std::uint32_t k = 0; k < t; ++k) {
        const unsigned nk = cd_.order_of(k);
        const u64 zk = F.pow(z, e / nk);
        const u64 nk_inv = F.inv(nk);
        std::vector<std::pair<unsigned long long, Rational>> terms;
        u64 mass = 0;
        for (unsigned j = 0; j < nk; ++j) {
          u64 m = 0;
          for (unsigned a = 0; a < nk; ++a) {
            u64 tw = F.pow(zk, (nk - static_cast<u64>(a) * j % nk) % nk);
            m = F.add(m, F.mul(chi_mod[r][power_classes[k][a]], tw));
          }
          m = F.mul(m, nk_inv);
          if (m > degrees_[r])
            fail("eigenvalue multiplicity failed to lift (class " + cd_.label(k) + ")");
          mass += m;
          if (m != 0) terms.emplace_back(j, Rational(static_cast<long long>(m)));
        }
        if (mass != degrees_[r]) fail("eigenvalue multiplicities do not sum to the degree");
        rows_[r][k] = Cyclotomic::from_terms(nk, std::move(terms));
      }
      if (!rows_[r][0].is_rational() ||
          rows_[r][0].rational_value() != Rational(static_cast<long long>(degrees_[r])))
        fail("lifted identity value disagrees with the degree");
    }

    // Trivial character first, the rest by degree then value order.
    std::vector<std::uint32_t> order(t);
    std::iota(order.begin(), order.end(), 0);
    std::uint32_t principal = t;
    for (std::uint32_t r = 0; r < t; ++r) {
      if (degrees_[r] != 1) continue;
      bool all_one = true;
      for (std::uint32_t k = 0; k < t && all_one; ++k)
        if (rows_[r][k] != Cyclotomic(1)) all_one = false;
      if (all_one) {
        principal = r;
        break;
      }
    }
    if (principal == t) fail("no trivial character found");
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (a == principal || b == principal) return a == principal && b != principal;
      if (degrees_[a] != degrees_[b]) return degrees_[a] < degrees_[b];
      for (std::uint32_t k = 1; k < t; ++k) {
        if (rows_[a][k] != rows_[b][k]) return value_less(rows_[a][k], rows_[b][k]);
      }
      return false;
    });
    std::vector<std::vector<Cyclotomic>> rows2;
    std::vector<unsigned long long> deg2;
    rows2.reserve(t);
    deg2.reserve(t);
    for (std::uint32_t r : order) {
      rows2.push_back(std::move(rows_[r]));
      deg2.push_back(degrees_[r]);
    }
    rows_ = std::move(rows2);
    degrees_ = std::move(deg2);

    verify_orthogonality();
  }

  const ClassData& classes() const { return cd_; }
  const PermGroup& group() const { return cd_.group(); }
  std::uint32_t num_rows() const { return static_cast<std::uint32_t>(rows_.size()); }
  unsigned long long degree(std::uint32_t r) const { return degrees_.at(r); }
  const Cyclotomic& value(std::uint32_t r, std::uint32_t k) const { return rows_.at(r).at(k); }
  const std::vector<Cyclotomic>& row(std::uint32_t r) const { return rows_.at(r); }
  u64 modulus() const { return prime_; }

  // Classes on which a character takes its degree; their union is the kernel.
  std::vector<std::uint32_t> kernel_classes(std::uint32_t r) const {
    std::vector<std::uint32_t> out;
    Cyclotomic d{Rational(static_cast<long long>(degrees_.at(r)))};
    for (std::uint32_t k = 0; k < num_rows(); ++k)
      if (rows_[r][k] == d) out.push_back(k);
    return out;
  }

  PermGroup kernel_group(std::uint32_t r) const {
    std::vector<Permutation> seeds;
    for (std::uint32_t k : kernel_classes(r)) seeds.push_back(cd_.rep(k));
    return normal_closure(cd_.group(), seeds);
  }

  // Exact-match row lookup; fails if the values are not a row of this table.
  std::uint32_t find_row(const std::vector<Cyclotomic>& values) const {
    if (values.size() != rows_.size()) fail("find_row: wrong number of classes");
    for (std::uint32_t r = 0; r < num_rows(); ++r) {
      bool same = true;
      for (std::uint32_t k = 0; k < num_rows() && same; ++k)
        if (rows_[r][k] != values[k]) same = false;
      if (same) return r;
    }
    fail("find_row: values match no row of the table");
  }

 private:
  void verify_orthogonality() const {
    const std::uint32_t t = num_rows();
    unsigned long long sum_sq = 0;
    for (std::uint32_t r = 0; r < t; ++r) sum_sq += degrees_[r] * degrees_[r];
    if (sum_sq != cd_.group().order()) fail("degrees violate sum-of-squares");
    // Column orthogonality across every pair of classes; for a square table
    // this is equivalent to row orthogonality and never leaves the small
    // cyclotomic fields the two columns live in.
    for (std::uint32_t i = 0; i < t; ++i)
      for (std::uint32_t j = i; j < t; ++j) {
        Cyclotomic s;
        for (std::uint32_t r = 0; r < t; ++r) s = s + rows_[r][i] * rows_[r][j].conj();
        Cyclotomic want{i == j ? Rational(static_cast<long long>(cd_.centralizer_size(i)))
                               : Rational(0)};
        if (s != want)
          fail("orthogonality fails at classes " + cd_.label(i) + ", " + cd_.label(j));
      }
  }

  ClassData cd_;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<unsigned long long> degrees_;
  u64 prime_ = 0;
};

// Indices of the classes lying inside a normal subgroup (tested on the
// representative; normality makes that decide the whole class).
inline std::vector<std::uint32_t> classes_in_subgroup(const ClassData& cd, const PermGroup& sub) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k)
    if (sub.contains(cd.rep(k))) out.push_back(k);
  return out;
}

// (1/|G|) sum over classes of |C_k| a_k conj(b_k); the Hermitian product
// under which distinct irreducible rows are orthonormal.
inline Cyclotomic inner_product(const ClassData& cd, const std::vector<Cyclotomic>& a,
                                const std::vector<Cyclotomic>& b) {
  if (a.size() != cd.num_classes() || b.size() != cd.num_classes())
    fail("inner_product: wrong number of classes");
  Cyclotomic s;
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k) {
    Rational w(BigInt(cd.size(k)), BigInt(cd.group().order()));
    s = s + Cyclotomic(w) * a[k] * b[k].conj();
  }
  return s;
}

// Values of a character of the big group read along the classes of a
// subgroup (the subgroup's elements keep their big-group values).
inline std::vector<Cyclotomic> restrict_row(const CharTable& big, std::uint32_t r,
                                            const ClassData& sub_cd) {
  std::vector<Cyclotomic> out;
  out.reserve(sub_cd.num_classes());
  for (std::uint32_t k = 0; k < sub_cd.num_classes(); ++k)
    out.push_back(big.value(r, big.classes().class_of(sub_cd.rep(k))));
  return out;
}

// Multiplicities of the irreducible rows of `tab` inside a class function;
// fails unless every multiplicity is a nonnegative integer and the rows
// rebuild the input exactly.
inline std::vector<unsigned long long> decompose_into(const CharTable& tab,
                                                      const std::vector<Cyclotomic>& values) {
  std::vector<unsigned long long> mult(tab.num_rows(), 0);
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    Cyclotomic m = inner_product(tab.classes(), values, tab.row(r));
    if (!m.is_rational() || !m.rational_value().is_integer() || m.rational_value().sign() < 0)
      fail("class function is not a nonnegative integer combination of irreducibles");
    BigInt mi = m.rational_value().num;
    if (mi > BigInt(1) << 62) fail("implausible multiplicity");
    mult[r] = mi.convert_to<unsigned long long>();
  }
  for (std::uint32_t k = 0; k < tab.num_rows(); ++k) {
    Cyclotomic s;
    for (std::uint32_t r = 0; r < tab.num_rows(); ++r)
      if (mult[r] != 0)
        s = s + Cyclotomic(Rational(static_cast<long long>(mult[r]))) * tab.value(r, k);
    if (s != values[k]) fail("decomposition does not rebuild the class function");
  }
  return mult;
}

}  // namespace cosets

#endif
