// Conjugacy classes of a finite permutation group, with the deterministic
// ordering and labels ("1a", "2a", "2b", ...) used everywhere else.
//
// Classes are sorted by (element order, class size, minimal member); the
// minimal member under the image-lexicographic order is the class
// representative. Labels number classes of equal element order a, b, c, ...
#ifndef COSETS_CLASS_DATA_HPP_
#define COSETS_CLASS_DATA_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cosets/common.hpp"
#include "cosets/perm_group.hpp"
#include "cosets/permutation.hpp"

namespace cosets {

class ClassData {
 public:
  explicit ClassData(const PermGroup& g, std::size_t cap = kDefaultElementCap) : group_(g) {
    const auto& elems = g.elements(cap);
    const std::uint32_t n = static_cast<std::uint32_t>(elems.size());
    std::vector<Permutation> gen_invs;
    for (const Permutation& gen : g.generators()) gen_invs.push_back(gen.inverse());

    class_of_.assign(n, UINT32_MAX);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t start = 0; start < n; ++start) {
      if (class_of_[start] != UINT32_MAX) continue;
      std::uint32_t cls = static_cast<std::uint32_t>(members_.size());
      members_.push_back({});
      stack.assign(1, start);
      class_of_[start] = cls;
      while (!stack.empty()) {
        std::uint32_t idx = stack.back();
        stack.pop_back();
        members_[cls].push_back(idx);
        const Permutation& x = elems[idx];
        for (size_t gi = 0; gi < gen_invs.size(); ++gi) {
          Permutation y = conjugate_inv(x, g.generators()[gi], gen_invs[gi]);
          std::uint32_t yi = g.element_index(y);
          if (class_of_[yi] == UINT32_MAX) {
            class_of_[yi] = cls;
            stack.push_back(yi);
          }
        }
      }
      std::sort(members_[cls].begin(), members_[cls].end());
    }

    // Canonical rep per class, then the global class order.
    reps_.reserve(members_.size());
    orders_.reserve(members_.size());
    for (const auto& m : members_) {
      const Permutation* best = &elems[m[0]];
      for (std::uint32_t idx : m)
        if (perm_less(elems[idx], *best)) best = &elems[idx];
      reps_.push_back(*best);
      orders_.push_back(reps_.back().order());
    }
    std::vector<std::uint32_t> perm(members_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [this](std::uint32_t a, std::uint32_t b) {
      if (orders_[a] != orders_[b]) return orders_[a] < orders_[b];
      if (members_[a].size() != members_[b].size())
        return members_[a].size() < members_[b].size();
      return perm_less(reps_[a], reps_[b]);
    });
    apply_order(perm);

    labels_.reserve(members_.size());
    for (size_t k = 0; k < members_.size(); ++k) {
      size_t same_before = 0;
      for (size_t j = 0; j < k; ++j)
        if (orders_[j] == orders_[k]) ++same_before;
      if (same_before >= 26) fail("more than 26 classes of one element order");
      labels_.push_back(std::to_string(orders_[k]) +
                        static_cast<char>('a' + same_before));
    }
  }

  const PermGroup& group() const { return group_; }
  std::uint32_t num_classes() const { return static_cast<std::uint32_t>(members_.size()); }
  const std::vector<std::uint32_t>& members(std::uint32_t k) const { return members_.at(k); }
  unsigned long long size(std::uint32_t k) const { return members_.at(k).size(); }
  const Permutation& rep(std::uint32_t k) const { return reps_.at(k); }
  unsigned order_of(std::uint32_t k) const { return orders_.at(k); }
  const std::string& label(std::uint32_t k) const { return labels_.at(k); }

  std::uint32_t find_label(const std::string& lab) const {
    for (std::uint32_t k = 0; k < num_classes(); ++k)
      if (labels_[k] == lab) return k;
    fail("no conjugacy class labeled '" + lab + "'");
  }

  std::uint32_t class_of_index(std::uint32_t elem_idx) const { return class_of_.at(elem_idx); }
  std::uint32_t class_of(const Permutation& x) const {
    return class_of_[group_.element_index(x)];
  }

  unsigned long long centralizer_size(std::uint32_t k) const {
    unsigned long long s = size(k);
    if (group_.order() % s != 0) fail("class size does not divide group order");
    return group_.order() / s;
  }

  // lcm of element orders; every character value of the group lives in the
  // cyclotomic field of this order.
  unsigned long long exponent() const {
    unsigned long long e = 1;
    for (unsigned o : orders_) e = lcm_u64(e, o);
    return e;
  }

  std::uint32_t inverse_class(std::uint32_t k) const { return class_of(rep(k).inverse()); }

  // Class of rep(k)^m; m may be any integer (taken mod the element order).
  std::uint32_t power_class(std::uint32_t k, long long m) const {
    long long o = orders_.at(k);
    long long r = ((m % o) + o) % o;
    return class_of(perm_power(rep(k), static_cast<unsigned long long>(r)));
  }

  // Number of pairs (x, y) with x in class i, y in class j and x*y equal to a
  // fixed element of class k.
  unsigned long long structure_constant(std::uint32_t i, std::uint32_t j,
                                        std::uint32_t k) const {
    const auto& elems = group_.elements();
    const Permutation& z = rep(k);
    unsigned long long count = 0;
    for (std::uint32_t xi : members_.at(i)) {
      Permutation y = compose(elems[xi].inverse(), z);
      if (class_of(y) == j) ++count;
    }
    return count;
  }

  // M[j][k] = number of pairs (x, y), x in class i, y in class j, with x*y a
  // fixed element of class k. Column vectors of central character values are
  // eigenvectors of every such matrix.
  std::vector<std::vector<unsigned long long>> class_matrix(std::uint32_t i) const {
    const auto& elems = group_.elements();
    const std::uint32_t t = num_classes();
    std::vector<std::vector<unsigned long long>> m(t,
        std::vector<unsigned long long>(t, 0));
    for (std::uint32_t k = 0; k < t; ++k) {
      const Permutation& z = rep(k);
      for (std::uint32_t xi : members_.at(i)) {
        Permutation y = compose(elems[xi].inverse(), z);
        m[class_of(y)][k] += 1;
      }
    }
    return m;
  }

  // Classes meeting the product set C_i * C_j, ascending. Conjugation
  // invariance lets one factor stay fixed at the class representative.
  std::vector<std::uint32_t> product_support(std::uint32_t i, std::uint32_t j) const {
    const auto& elems = group_.elements();
    std::vector<bool> hit(num_classes(), false);
    const Permutation& y = rep(j);
    for (std::uint32_t xi : members_.at(i)) hit[class_of(compose(elems[xi], y))] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < num_classes(); ++k)
      if (hit[k]) out.push_back(k);
    return out;
  }

 private:
  void apply_order(const std::vector<std::uint32_t>& perm) {
    std::vector<std::vector<std::uint32_t>> m2(members_.size());
    std::vector<Permutation> r2;
    std::vector<unsigned> o2(members_.size());
    r2.reserve(members_.size());
    std::vector<std::uint32_t> new_of(members_.size());
    for (std::uint32_t pos = 0; pos < perm.size(); ++pos) {
      m2[pos] = std::move(members_[perm[pos]]);
      r2.push_back(std::move(reps_[perm[pos]]));
      o2[pos] = orders_[perm[pos]];
      new_of[perm[pos]] = pos;
    }
    members_ = std::move(m2);
    reps_ = std::move(r2);
    orders_ = std::move(o2);
    for (auto& c : class_of_) c = new_of[c];
  }

  PermGroup group_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<Permutation> reps_;
  std::vector<unsigned> orders_;
  std::vector<std::string> labels_;
};

}  // namespace cosets

#endif
