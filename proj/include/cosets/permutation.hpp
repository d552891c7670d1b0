// Permutations of {0, ..., n-1} as image tables.
//
// Composition is fixed once for the whole library: (a * b)(i) = a(b(i)),
// i.e. b acts first. Conjugation is conj(x, g) = g^-1 * x * g.
#ifndef COSETS_PERMUTATION_HPP_
#define COSETS_PERMUTATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cosets/common.hpp"

namespace cosets {

class Permutation {
 public:
  Permutation() = default;

  // Validates that images is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint32_t v : img_) {
      if (v >= img_.size() || seen[v]) fail("not a permutation");
      seen[v] = true;
    }
  }

  // Internal factory for images already known to be a bijection.
  static Permutation unchecked(std::vector<std::uint32_t> images) {
    Permutation p;
    p.img_ = std::move(images);
    return p;
  }

  static Permutation identity(std::uint32_t degree) {
    std::vector<std::uint32_t> v(degree);
    for (std::uint32_t i = 0; i < degree; ++i) v[i] = i;
    return unchecked(std::move(v));
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t operator[](std::uint32_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> v(img_.size());
    for (std::uint32_t i = 0; i < degree(); ++i) v[img_[i]] = i;
    return unchecked(std::move(v));
  }

  // Smallest moved point; degree() if identity.
  std::uint32_t first_moved() const {
    for (std::uint32_t i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return degree();
  }

  std::uint64_t order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (std::uint32_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = lcm_u64(ord, len);
    }
    return ord;
  }

  std::string cycle_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::string out;
    for (std::uint32_t i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      out += "(";
      bool first = true;
      for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (!first) out += " ";
        out += std::to_string(j);
        first = false;
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

 private:
  std::vector<std::uint32_t> img_;
};

// Total order: by degree, then lexicographic on images. Used for canonical
// class representatives and deterministic generator ordering.
inline bool perm_less(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.images() < b.images();
}

// (a * b)(i) = a(b(i)): apply b first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) fail("compose: degree mismatch");
  std::vector<std::uint32_t> v(a.degree());
  for (std::uint32_t i = 0; i < a.degree(); ++i) v[i] = a[b[i]];
  return Permutation::unchecked(std::move(v));
}

// g^-1 * x * g with g^-1 supplied by the caller (hot loops).
inline Permutation conjugate_inv(const Permutation& x, const Permutation& g,
                                 const Permutation& ginv) {
  std::vector<std::uint32_t> v(x.degree());
  for (std::uint32_t i = 0; i < x.degree(); ++i) v[i] = ginv[x[g[i]]];
  return Permutation::unchecked(std::move(v));
}

inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  return conjugate_inv(x, g, g.inverse());
}

// a^-1 * b^-1 * a * b.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

inline Permutation perm_power(const Permutation& p, std::uint64_t k) {
  Permutation r = Permutation::identity(p.degree());
  for (std::uint64_t i = 0; i < k; ++i) r = compose(r, p);
  return r;
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint32_t v : p.images()) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace cosets

#endif
