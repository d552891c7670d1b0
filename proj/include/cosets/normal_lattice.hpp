// Normal-subgroup lattice from character kernels, plus chief series and
// recognition of the simple factors that appear in them.
//
// A normal subgroup is a union of conjugacy classes, so it is stored as a
// sorted list of class indices.  Every normal subgroup is an intersection
// of irreducible-character kernels, so closing the kernel family under
// intersection enumerates the whole lattice without any subgroup search.
#ifndef COSETS_NORMAL_LATTICE_HPP_
#define COSETS_NORMAL_LATTICE_HPP_

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cosets/char_table.hpp"
#include "cosets/class_data.hpp"
#include "cosets/common.hpp"
#include "cosets/perm_group.hpp"

namespace cosets {

struct NormalSubgroup {
  std::vector<std::uint32_t> classes;  // sorted class indices, always containing 0
  unsigned long long order;            // sum of the class sizes
  PermGroup group;                     // materialized subgroup, order checked

  NormalSubgroup(std::vector<std::uint32_t> cls, unsigned long long ord, PermGroup grp)
      : classes(std::move(cls)), order(ord), group(std::move(grp)) {}
};

namespace detail {

inline PermGroup materialize_class_union(const ClassData& cd,
                                         const std::vector<std::uint32_t>& classes,
                                         unsigned long long expected_order) {
  std::vector<Permutation> seeds;
  for (std::uint32_t k : classes)
    if (k != 0) seeds.push_back(cd.rep(k));
  PermGroup h = seeds.empty() ? PermGroup::trivial(cd.group().degree())
                              : normal_closure(cd.group(), std::move(seeds));
  check(h.order() == expected_order,
        "normal subgroup materialization: closure has order " + std::to_string(h.order()) +
            " but the class union has " + std::to_string(expected_order) + " elements");
  return h;
}

}  // namespace detail

// All normal subgroups of the table's group, sorted by (order, class set).
// The first entry is the trivial subgroup, the last is the group itself.
inline std::vector<NormalSubgroup> all_normal_subgroups(const CharTable& table) {
  const ClassData& cd = table.classes();
  std::set<std::vector<std::uint32_t>> sets;
  for (std::size_t r = 0; r < table.num_rows(); ++r) sets.insert(table.kernel_classes(r));
  sets.insert({0});  // intersection of all kernels; present even for abelian groups
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::uint32_t>> snapshot(sets.begin(), sets.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<std::uint32_t> meet;
        std::set_intersection(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                              snapshot[j].end(), std::back_inserter(meet));
        if (sets.insert(std::move(meet)).second) grew = true;
      }
  }

  std::vector<NormalSubgroup> out;
  for (const auto& s : sets) {
    unsigned long long order = 0;
    for (std::uint32_t k : s) order += cd.size(k);
    out.emplace_back(s, order, detail::materialize_class_union(cd, s, order));
  }
  std::sort(out.begin(), out.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.classes < b.classes;
  });
  return out;
}

// Independent enumeration for cross-checking: class sets of single-class
// normal closures, closed under join.  Slower (walks element lists), meant
// for small groups only.
inline std::vector<std::vector<std::uint32_t>> all_normal_class_sets_brute(const ClassData& cd) {
  const PermGroup& g = cd.group();
  auto class_set_of = [&cd](const PermGroup& h) {
    std::set<std::uint32_t> s;
    for (const Permutation& p : h.elements()) s.insert(cd.class_of(p));
    return std::vector<std::uint32_t>(s.begin(), s.end());
  };
  auto closure_of_classes = [&](const std::vector<std::uint32_t>& classes) {
    std::vector<Permutation> seeds;
    for (std::uint32_t k : classes)
      if (k != 0) seeds.push_back(cd.rep(k));
    PermGroup h =
        seeds.empty() ? PermGroup::trivial(g.degree()) : normal_closure(g, std::move(seeds));
    return class_set_of(h);
  };

  std::set<std::vector<std::uint32_t>> sets;
  sets.insert({0});
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k) sets.insert(closure_of_classes({k}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::uint32_t>> snapshot(sets.begin(), sets.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<std::uint32_t> both;
        std::set_union(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                       snapshot[j].end(), std::back_inserter(both));
        if (sets.insert(closure_of_classes(both)).second) grew = true;
      }
  }
  return std::vector<std::vector<std::uint32_t>>(sets.begin(), sets.end());
}

// One step L < M of a chief series, with the factor M/L analyzed.
struct ChiefStep {
  unsigned long long lower_order = 0;
  unsigned long long upper_order = 0;
  unsigned long long factor_order = 0;
  bool abelian = false;
  bool simple = false;
  std::string name;                // recognized name, or "unrecognized"
  bool lie_type_odd_char = false;  // has a realization as Lie type in odd characteristic
  unsigned long long psl2_field = 0;  // q when the factor is psl(2,q), else 0
};

struct ChiefSeries {
  std::vector<std::size_t> chain;  // indices into the lattice, trivial first
  std::vector<ChiefStep> steps;    // one per consecutive pair
};

namespace detail {

struct SimpleGroupEntry {
  unsigned long long order;
  const char* name;
  bool lie_odd;
  unsigned long long psl2_q;
};

// Simple groups of order at most 60000, keyed by order.  20160 is ambiguous
// (alt(8) vs psl(3,4)) and is resolved by conjugacy-class count below.
inline const std::vector<SimpleGroupEntry>& simple_group_table() {
  static const std::vector<SimpleGroupEntry> table = {
      {60, "alt(5) = psl(2,4) = psl(2,5)", true, 5},
      {168, "psl(2,7) = psl(3,2)", true, 7},
      {360, "alt(6) = psl(2,9)", true, 9},
      {504, "psl(2,8)", false, 8},
      {660, "psl(2,11)", true, 11},
      {1092, "psl(2,13)", true, 13},
      {2448, "psl(2,17)", true, 17},
      {2520, "alt(7)", false, 0},
      {3420, "psl(2,19)", true, 19},
      {4080, "psl(2,16)", false, 16},
      {5616, "psl(3,3)", true, 0},
      {6048, "u(3,3)", true, 0},
      {6072, "psl(2,23)", true, 23},
      {7800, "psl(2,25)", true, 25},
      {7920, "m11", false, 0},
      {9828, "psl(2,27)", true, 27},
      {12180, "psl(2,29)", true, 29},
      {14880, "psl(2,31)", true, 31},
      {25308, "psl(2,37)", true, 37},
      {25920, "psp(4,3) = u(4,2)", true, 0},
      {29120, "sz(8)", false, 0},
      {32736, "psl(2,32)", false, 32},
      {34440, "psl(2,41)", true, 41},
      {39732, "psl(2,43)", true, 43},
      {51888, "psl(2,47)", true, 47},
      {58800, "psl(2,49)", true, 49},
  };
  return table;
}

inline ChiefStep analyze_chief_factor(const PermGroup& upper, const PermGroup& lower) {
  ChiefStep step;
  step.lower_order = lower.order();
  step.upper_order = upper.order();
  // Over a trivial kernel the factor is the group itself; the coset action
  // would needlessly rebuild it as a regular representation of degree |upper|.
  PermGroup q = lower.is_trivial() ? upper : CosetAction(upper, lower).quotient();
  step.factor_order = q.order();
  if (q.is_abelian()) {
    step.abelian = true;
    ClassData qcd(q);
    unsigned long long p = 0;
    for (std::size_t k = 0; k < qcd.num_classes(); ++k) {
      unsigned long long n = qcd.order_of(k);
      if (n == 1) continue;
      if (p == 0) p = n;
      check(n == p, "chief factor of order " + std::to_string(q.order()) +
                        " is abelian but not elementary abelian");
    }
    unsigned long long power = 1, exponent_count = 0;
    while (power < step.factor_order) power *= p, ++exponent_count;
    check(power == step.factor_order,
          "abelian chief factor order is not a power of " + std::to_string(p));
    step.simple = (step.factor_order == p);
    step.name = "abelian " + std::to_string(p) +
                (exponent_count > 1 ? "^" + std::to_string(exponent_count) : "");
    return step;
  }

  // Nonabelian: verify simplicity by scanning the factor's own lattice,
  // then try to name it.  Never guess a name on a mismatch.
  ClassData qcd(q);
  CharTable qt(qcd);
  bool is_simple = all_normal_subgroups(qt).size() == 2;
  step.simple = is_simple;
  step.name = "unrecognized";
  if (is_simple && step.factor_order <= 60000) {
    for (const auto& entry : simple_group_table()) {
      if (entry.order != step.factor_order) continue;
      if (entry.order == 20160) {
        // alt(8) has 14 conjugacy classes, psl(3,4) has 10
        if (qcd.num_classes() == 14) {
          step.name = "alt(8) = psl(4,2)";
          step.lie_type_odd_char = false;
        } else if (qcd.num_classes() == 10) {
          step.name = "psl(3,4)";
          step.lie_type_odd_char = false;
        }
        break;
      }
      step.name = entry.name;
      step.lie_type_odd_char = entry.lie_odd;
      step.psl2_field = entry.psl2_q;
      break;
    }
  }
  return step;
}

}  // namespace detail

// Chief series of the lattice's group passing through lattice[through]:
// each step is minimal among the group's normal subgroups, so every factor
// is a chief factor.  Ties break deterministically by (order, class set).
inline ChiefSeries chief_series_through(const std::vector<NormalSubgroup>& lattice,
                                        std::size_t through) {
  check(through < lattice.size(), "chief series: lattice index out of range");
  auto is_subset = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::size_t trivial_index = 0, full_index = lattice.size() - 1;
  check(lattice[trivial_index].order == 1, "chief series: lattice must start at the trivial subgroup");
  for (const NormalSubgroup& n : lattice)
    check(is_subset(n.classes, lattice[full_index].classes),
          "chief series: lattice must end at the full group");

  ChiefSeries series;
  series.chain.push_back(trivial_index);
  std::size_t cur = trivial_index;
  for (std::size_t target : {through, full_index}) {
    while (cur != target) {
      std::size_t best = lattice.size();
      for (std::size_t cand = 0; cand < lattice.size(); ++cand) {
        if (cand == cur) continue;
        if (!is_subset(lattice[cur].classes, lattice[cand].classes)) continue;
        if (!is_subset(lattice[cand].classes, lattice[target].classes)) continue;
        bool minimal = true;
        for (std::size_t mid = 0; mid < lattice.size() && minimal; ++mid) {
          if (mid == cur || mid == cand) continue;
          if (is_subset(lattice[cur].classes, lattice[mid].classes) &&
              is_subset(lattice[mid].classes, lattice[cand].classes))
            minimal = false;
        }
        if (!minimal) continue;
        if (best == lattice.size() || lattice[cand].order < lattice[best].order ||
            (lattice[cand].order == lattice[best].order &&
             lattice[cand].classes < lattice[best].classes))
          best = cand;
      }
      check(best != lattice.size(), "chief series: no minimal step found (lattice incomplete)");
      series.steps.push_back(
          detail::analyze_chief_factor(lattice[best].group, lattice[cur].group));
      series.chain.push_back(best);
      cur = best;
    }
  }
  return series;
}

}  // namespace cosets

#endif
