// Permutation groups with a base and strong generating set (Schreier-Sims).
//
// Groups are value types: a PermGroup is a cheap handle to an immutable core
// built once from its generators. The element list is enumerated lazily (and
// at most once) by breadth-first closure over the sorted generators, so its
// order is deterministic across runs.
#ifndef COSETS_PERM_GROUP_HPP_
#define COSETS_PERM_GROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <unordered_map>
#include <vector>

#include "cosets/common.hpp"
#include "cosets/permutation.hpp"

namespace cosets {

inline constexpr std::size_t kDefaultElementCap = 100000;
inline constexpr std::uint64_t kDefaultSeed = 1;

namespace detail {

struct StabLevel {
  std::uint32_t base_point = 0;
  std::vector<Permutation> gens;  // residues assigned to this level
  std::vector<std::int32_t> where;
  std::vector<std::uint32_t> orbit;
  std::vector<Permutation> transversal;      // transversal[j](base_point) == orbit[j]
  std::vector<Permutation> transversal_inv;
};

}  // namespace detail

class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> generators, std::uint32_t degree_hint = 0) {
    auto core = std::make_shared<Core>();
    Core& c = *core;
    core_ = core;
    c.degree = degree_hint;
    for (const Permutation& g : generators) {
      if (c.degree == 0) c.degree = g.degree();
      if (g.degree() != c.degree) fail("group generators have mixed degrees");
    }
    if (c.degree == 0) c.degree = 1;
    for (Permutation& g : generators)
      if (!g.is_identity()) c.gens.push_back(std::move(g));
    std::sort(c.gens.begin(), c.gens.end(),
              [](const Permutation& a, const Permutation& b) { return perm_less(a, b); });
    c.gens.erase(std::unique(c.gens.begin(), c.gens.end()), c.gens.end());
    build_chain(c);
    c.order = 1;
    for (const auto& lvl : c.chain) c.order *= lvl.orbit.size();
    for (const Permutation& g : c.gens)
      if (!contains(g)) fail("strong generating set failed to capture a generator");
  }

  static PermGroup trivial(std::uint32_t degree) {
    return PermGroup(std::vector<Permutation>{}, degree);
  }

  std::uint32_t degree() const { return core_->degree; }
  unsigned long long order() const { return core_->order; }
  const std::vector<Permutation>& generators() const { return core_->gens; }
  bool is_trivial() const { return core_->order == 1; }

  bool is_abelian() const {
    const auto& gs = core_->gens;
    for (size_t i = 0; i < gs.size(); ++i)
      for (size_t j = i + 1; j < gs.size(); ++j)
        if (compose(gs[i], gs[j]) != compose(gs[j], gs[i])) return false;
    return true;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != core_->degree) return false;
    Permutation r = p;
    return sift_from(*core_, r, 0, nullptr) && r.is_identity();
  }

  // All elements, breadth-first over sorted generators starting at identity.
  // Fails if the group order exceeds cap.
  const std::vector<Permutation>& elements(std::size_t cap = kDefaultElementCap) const {
    const Core& c = *core_;
    if (c.order > cap) fail("group order " + std::to_string(c.order) +
                            " exceeds element cap " + std::to_string(cap));
    std::call_once(c.elems_once, [&c] { enumerate(c); });
    return c.elems;
  }

  // Index of an element in elements(); fails if absent.
  std::uint32_t element_index(const Permutation& p) const {
    elements();
    auto it = core_->elem_index.find(p);
    if (it == core_->elem_index.end()) fail("element_index: not a group element");
    return it->second;
  }

  // Uniform random element: product of uniformly chosen transversal
  // representatives, one per level.
  Permutation random_element(std::mt19937_64& rng) const {
    const Core& c = *core_;
    Permutation r = Permutation::identity(c.degree);
    for (const auto& lvl : c.chain) {
      std::uint64_t j = rng() % lvl.orbit.size();
      r = compose(r, lvl.transversal[static_cast<size_t>(j)]);
    }
    return r;
  }

  bool is_subgroup_of(const PermGroup& g) const {
    if (degree() != g.degree()) return false;
    for (const Permutation& h : generators())
      if (!g.contains(h)) return false;
    return true;
  }

  bool same_group(const PermGroup& g) const {
    return order() == g.order() && is_subgroup_of(g);
  }

 private:
  struct Core {
    std::uint32_t degree = 1;
    std::vector<Permutation> gens;
    std::vector<detail::StabLevel> chain;
    unsigned long long order = 1;
    mutable std::once_flag elems_once;
    mutable std::vector<Permutation> elems;
    mutable std::unordered_map<Permutation, std::uint32_t, PermHash> elem_index;
  };

  std::shared_ptr<const Core> core_;

  static void recompute_level(Core& c, size_t i) {
    detail::StabLevel& lvl = c.chain[i];
    lvl.where.assign(c.degree, -1);
    lvl.orbit.clear();
    lvl.transversal.clear();
    lvl.transversal_inv.clear();
    lvl.orbit.push_back(lvl.base_point);
    lvl.where[lvl.base_point] = 0;
    lvl.transversal.push_back(Permutation::identity(c.degree));
    lvl.transversal_inv.push_back(Permutation::identity(c.degree));
    // Acting generators: residues at this level or deeper (deeper ones fix
    // this base point, but keeping them is harmless and keeps orbits exact).
    std::vector<const Permutation*> gens;
    for (size_t j = i; j < c.chain.size(); ++j)
      for (const Permutation& g : c.chain[j].gens) gens.push_back(&g);
    for (size_t head = 0; head < lvl.orbit.size(); ++head) {
      std::uint32_t q = lvl.orbit[head];
      for (const Permutation* g : gens) {
        std::uint32_t p = (*g)[q];
        if (lvl.where[p] < 0) {
          lvl.where[p] = static_cast<std::int32_t>(lvl.orbit.size());
          lvl.orbit.push_back(p);
          Permutation u = compose(*g, lvl.transversal[head]);
          lvl.transversal_inv.push_back(u.inverse());
          lvl.transversal.push_back(std::move(u));
        }
      }
    }
  }

  // Strip p through levels starting at `from`, modifying it in place.
  // Returns true if p passed every level (residue fixes all base points);
  // on false, *stuck is the level whose transversal p left.
  static bool sift_from(const Core& c, Permutation& p, size_t from, size_t* stuck) {
    for (size_t i = from; i < c.chain.size(); ++i) {
      const detail::StabLevel& lvl = c.chain[i];
      std::uint32_t q = p[lvl.base_point];
      if (q == lvl.base_point) continue;
      if (lvl.where[q] < 0) {
        if (stuck) *stuck = i;
        return false;
      }
      p = compose(lvl.transversal_inv[static_cast<size_t>(lvl.where[q])], p);
    }
    return true;
  }

  // Sift p from level `from` and add the residue to the chain when p is not
  // already captured. Returns true when the chain changed.
  static bool insert_element(Core& c, Permutation p, size_t from) {
    size_t stuck = 0;
    bool stripped = sift_from(c, p, from, &stuck);
    if (stripped && p.is_identity()) return false;
    if (stripped) {
      // Fixes every existing base point yet is not the identity: new level.
      stuck = c.chain.size();
      detail::StabLevel lvl;
      lvl.base_point = p.first_moved();
      c.chain.push_back(std::move(lvl));
    }
    c.chain[stuck].gens.push_back(std::move(p));
    for (size_t j = 0; j <= stuck; ++j) recompute_level(c, j);
    return true;
  }

  static void build_chain(Core& c) {
    c.chain.clear();
    for (const Permutation& g : c.gens) insert_element(c, g, 0);
    // Close under Schreier generators; restart the scan after every change
    // because insertions rebuild transversals.
    bool stable = false;
    while (!stable) {
      stable = true;
      for (size_t i = 0; i < c.chain.size() && stable; ++i) {
        std::vector<Permutation> gens;  // snapshot: insertions mutate the chain
        for (size_t j = i; j < c.chain.size(); ++j)
          for (const Permutation& g : c.chain[j].gens) gens.push_back(g);
        const size_t orbit_size = c.chain[i].orbit.size();
        for (size_t j = 0; j < orbit_size && stable; ++j) {
          for (const Permutation& s : gens) {
            const detail::StabLevel& lvl = c.chain[i];
            std::uint32_t p = s[lvl.orbit[j]];
            Permutation schreier =
                compose(lvl.transversal_inv[static_cast<size_t>(lvl.where[p])],
                        compose(s, lvl.transversal[j]));
            if (schreier.is_identity()) continue;
            if (insert_element(c, std::move(schreier), i + 1)) {
              stable = false;
              break;
            }
          }
        }
      }
    }
  }

  static void enumerate(const Core& c) {
    c.elems.clear();
    c.elem_index.clear();
    Permutation id = Permutation::identity(c.degree);
    c.elem_index.emplace(id, 0);
    c.elems.push_back(std::move(id));
    for (size_t head = 0; head < c.elems.size(); ++head) {
      for (const Permutation& g : c.gens) {
        Permutation nxt = compose(c.elems[head], g);
        if (c.elem_index.count(nxt)) continue;
        c.elem_index.emplace(nxt, static_cast<std::uint32_t>(c.elems.size()));
        c.elems.push_back(std::move(nxt));
      }
    }
    if (c.elems.size() != c.order) fail("element enumeration disagrees with group order");
  }
};

// Closure of `seeds` under conjugation by g's generators: the smallest
// normal subgroup of g containing the seeds.
inline PermGroup normal_closure(const PermGroup& g, std::vector<Permutation> seeds) {
  std::vector<Permutation> gens;
  for (Permutation& s : seeds)
    if (!s.is_identity()) gens.push_back(std::move(s));
  std::sort(gens.begin(), gens.end(),
            [](const Permutation& a, const Permutation& b) { return perm_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  PermGroup h(gens, g.degree());
  std::vector<std::pair<Permutation, Permutation>> conj;  // (gen, gen^-1)
  for (const Permutation& x : g.generators()) conj.emplace_back(x, x.inverse());
  for (size_t head = 0; head < gens.size(); ++head) {
    for (const auto& [x, xinv] : conj) {
      Permutation cand = conjugate_inv(gens[head], x, xinv);
      if (h.contains(cand)) continue;
      gens.push_back(std::move(cand));
      h = PermGroup(gens, g.degree());
    }
  }
  return h;
}

inline PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> seeds;
  const auto& gs = g.generators();
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = 0; j < gs.size(); ++j)
      if (i != j) seeds.push_back(commutator(gs[i], gs[j]));
  return normal_closure(g, std::move(seeds));
}

// g = series[0] > series[1] > ... until the term stabilizes.
inline std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

inline bool is_solvable(const PermGroup& g) {
  return derived_series(g).back().is_trivial();
}

inline unsigned long long centralizer_order(const PermGroup& g, const Permutation& x,
                                            std::size_t cap = kDefaultElementCap) {
  unsigned long long n = 0;
  for (const Permutation& h : g.elements(cap))
    if (compose(h, x) == compose(x, h)) ++n;
  return n;
}

// Action of g on the cosets xN of a normal subgroup by left multiplication:
// the image of h sends xN to (h*x)N. Coset 0 is N itself. For normal N the
// left cosets coincide with the right cosets, so this is the quotient group.
class CosetAction {
 public:
  CosetAction(const PermGroup& g, const PermGroup& n)
      : group_(g), normal_(n), quotient_(PermGroup::trivial(1)) {
    if (n.degree() != g.degree()) fail("coset action: degree mismatch");
    if (!n.is_subgroup_of(g)) fail("coset action: not a subgroup");
    for (const Permutation& x : g.generators()) {
      Permutation xinv = x.inverse();
      for (const Permutation& h : n.generators())
        if (!n.contains(conjugate_inv(h, x, xinv)))
          fail("coset action: subgroup is not normal");
    }
    // Enumerate cosets breadth-first from N.
    reps_.push_back(Permutation::identity(g.degree()));
    rep_invs_.push_back(reps_[0]);
    for (size_t head = 0; head < reps_.size(); ++head) {
      for (const Permutation& h : g.generators()) {
        Permutation cand = compose(h, reps_[head]);
        bool known = false;
        for (const Permutation& rinv : rep_invs_)
          if (normal_.contains(compose(rinv, cand))) {
            known = true;
            break;
          }
        if (!known) {
          rep_invs_.push_back(cand.inverse());
          reps_.push_back(std::move(cand));
        }
      }
    }
    std::vector<Permutation> qgens;
    for (const Permutation& h : g.generators()) qgens.push_back(image(h));
    quotient_ = PermGroup(qgens, static_cast<std::uint32_t>(reps_.size()));
    if (quotient_.order() * normal_.order() != group_.order())
      fail("coset action: |G/N| * |N| != |G|");
  }

  const PermGroup& group() const { return group_; }
  const PermGroup& normal() const { return normal_; }
  const PermGroup& quotient() const { return quotient_; }
  std::uint32_t num_cosets() const { return static_cast<std::uint32_t>(reps_.size()); }
  const Permutation& rep(std::uint32_t i) const { return reps_[i]; }

  std::uint32_t coset_of(const Permutation& x) const {
    for (std::uint32_t i = 0; i < num_cosets(); ++i)
      if (normal_.contains(compose(rep_invs_[i], x))) return i;
    fail("coset_of: element not in the group");
  }

  // Image of x in the quotient as a permutation of coset indices.
  Permutation image(const Permutation& x) const {
    std::vector<std::uint32_t> v(reps_.size());
    for (std::uint32_t j = 0; j < num_cosets(); ++j) v[j] = coset_of(compose(x, reps_[j]));
    return Permutation(std::move(v));
  }

 private:
  PermGroup group_;
  PermGroup normal_;
  PermGroup quotient_;
  std::vector<Permutation> reps_;
  std::vector<Permutation> rep_invs_;
};

}  // namespace cosets

#endif
