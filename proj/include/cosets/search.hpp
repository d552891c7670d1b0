// Systematic scans over the catalog: enumerate every proper nontrivial
// normal subgroup of each group, take one coset representative per
// conjugacy class of the quotient, classify the coset, and hold the
// classified shapes against the theory.  The sweep variant additionally
// evaluates each characterization independently so that a genuine
// equivalence failure would surface as a recorded discrepancy instead of a
// silent shortcut.
#ifndef COSETS_SEARCH_HPP_
#define COSETS_SEARCH_HPP_

#include <cstdint>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "cosets/catalog.hpp"
#include "cosets/char_table.hpp"
#include "cosets/class_data.hpp"
#include "cosets/common.hpp"
#include "cosets/coset_check.hpp"
#include "cosets/normal_lattice.hpp"
#include "cosets/perm_group.hpp"

namespace cosets {

struct SearchFinding {
  unsigned long long n_order = 0;
  std::string coset_class;  // label of the class of the chosen representative
  CosetShape shape = CosetShape::kSpread;
  unsigned long long size_k = 0;
  unsigned long long size_d = 0;  // set for two-class cosets
  bool checks_pass = true;
  std::string detail;
};

struct GroupSearchResult {
  std::string spec;
  unsigned long long order = 0;
  bool ok = false;
  std::string error;  // set when the group aborted instead of finishing
  std::vector<SearchFinding> findings;
};

namespace detail {

// One coset representative per nonidentity conjugacy class of G/N.
inline std::vector<Permutation> coset_class_reps(const CosetAction& action) {
  ClassData qcd(action.quotient());
  std::vector<Permutation> reps;
  for (std::uint32_t q = 0; q < qcd.num_classes(); ++q) {
    Permutation qrep = qcd.rep(q);
    if (qrep.is_identity()) continue;
    // the quotient acts regularly on cosets, so the image of coset 0 names
    // the coset this quotient element represents
    reps.push_back(action.rep(qrep[0]));
  }
  return reps;
}

inline GroupSearchResult search_one_group(const GroupSpec& spec) {
  GroupSearchResult out;
  out.spec = spec.str();
  try {
    PermGroup g = make_group(spec);
    out.order = g.order();
    CharTable tab{ClassData(g)};
    const ClassData& cd = tab.classes();
    std::vector<NormalSubgroup> lattice = all_normal_subgroups(tab);
    out.ok = true;
    for (const NormalSubgroup& n : lattice) {
      if (n.order == 1 || n.order == g.order()) continue;
      CosetAction action(g, n.group);
      for (const Permutation& x : coset_class_reps(action)) {
        CosetAnalysis a = classify_coset(cd, n.group, x);
        SearchFinding f;
        f.n_order = n.order;
        f.coset_class = cd.label(a.class_k);
        f.shape = a.shape;
        f.size_k = a.size_k;
        f.size_d = a.size_d;
        switch (a.shape) {
          case CosetShape::kSingleClass:
            f.checks_pass = is_solvable(n.group);
            f.detail = f.checks_pass
                           ? "single class; N is solvable as required"
                           : "single class but N of order " + std::to_string(n.order) +
                                 " is not solvable";
            break;
          case CosetShape::kTwoClasses: {
            TheoremReport rep = verify_two_class_coset(tab, n, x);
            f.checks_pass = rep.pass();
            f.detail = "two classes of sizes " + std::to_string(a.size_k) + " and " +
                       std::to_string(a.size_d);
            for (const CheckLine& l : rep.lines)
              if (!l.pass) {
                f.detail = "FAILED " + l.name + ": " + l.detail;
                break;
              }
            break;
          }
          case CosetShape::kSpread:
            f.detail = "meets " + std::to_string(a.coset_classes.size()) + " classes";
            break;
        }
        if (!f.checks_pass) out.ok = false;
        out.findings.push_back(std::move(f));
      }
    }
  } catch (const std::exception& e) {
    out.ok = false;
    out.error = e.what();
  }
  return out;
}

}  // namespace detail

// Classify every coset of every proper nontrivial normal subgroup across
// the given specs.  One group failing (or throwing) does not stop the
// rest; results come back in input order regardless of parallelism.
inline std::vector<GroupSearchResult> search_groups(const std::vector<GroupSpec>& specs,
                                                    bool parallel = false) {
  std::vector<GroupSearchResult> results(specs.size());
  if (parallel) {
    std::vector<std::future<GroupSearchResult>> futures;
    futures.reserve(specs.size());
    for (const GroupSpec& s : specs)
      futures.push_back(std::async(std::launch::async, detail::search_one_group, s));
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < specs.size(); ++i)
      results[i] = detail::search_one_group(specs[i]);
  }
  return results;
}

struct SweepStats {
  std::size_t groups = 0;
  std::size_t cosets = 0;
  std::vector<std::string> discrepancies;  // empty means every check agreed
};

namespace detail {

// The three faces of the two-class condition, each computed from scratch.
struct TwoClassFaces {
  bool by_scan = false;        // the coset meets exactly two classes
  bool by_products = false;    // NK = ND = {K, D} for some D
  bool by_characters = false;  // some D satisfies all three character conditions
};

inline TwoClassFaces evaluate_faces(const CharTable& tab, const NormalSubgroup& n,
                                    const CosetAnalysis& a) {
  const ClassData& cd = tab.classes();
  TwoClassFaces faces;
  faces.by_scan = (a.shape == CosetShape::kTwoClasses);

  const std::uint32_t K = a.class_k;
  std::vector<std::uint32_t> nk = support_union_with(cd, n.classes, K);
  if (nk.size() == 2 && (nk[0] == K || nk[1] == K)) {
    std::uint32_t d = (nk[0] == K) ? nk[1] : nk[0];
    faces.by_products = (support_union_with(cd, n.classes, d) == nk);
  }

  for (std::uint32_t d = 0; d < cd.num_classes() && !faces.by_characters; ++d) {
    if (d == K) continue;
    const Rational size_k(BigInt(cd.size(K))), size_d(BigInt(cd.size(d)));
    bool fits = true;
    for (std::uint32_t r = 0; r < tab.num_rows() && fits; ++r) {
      if (kernel_contains(tab, r, n.classes))
        fits = (tab.value(r, K) == tab.value(r, d));
      else
        fits = (Cyclotomic(size_k) * tab.value(r, K) + Cyclotomic(size_d) * tab.value(r, d))
                   .is_zero();
    }
    unsigned long long total = cd.size(K) + cd.size(d);
    fits = fits && (cd.group().order() % total == 0) &&
           (a.quotient_centralizer == cd.group().order() / total);
    faces.by_characters = fits;
  }
  return faces;
}

}  // namespace detail

// Cross-validate the characterizations on every coset of every proper
// nontrivial normal subgroup of every catalog group up to max_order: the
// two-class condition read off the coset scan, the class-sum products, and
// the character conditions must agree three ways; the single-class
// condition must match the vanishing criterion; single-class kernels must
// be solvable; and a two-class coset under a nontrivially extending
// character must have equal halves.
inline SweepStats sweep_catalog(unsigned long long max_order, bool parallel = false) {
  std::vector<GroupSpec> specs = catalog_sweep_list(max_order);
  SweepStats stats;
  stats.groups = specs.size();

  struct GroupOutcome {
    std::size_t cosets = 0;
    std::vector<std::string> discrepancies;
  };
  auto sweep_one = [](const GroupSpec& spec) {
    GroupOutcome out;
    auto flag = [&](const std::string& what) { out.discrepancies.push_back(spec.str() + ": " + what); };
    try {
      PermGroup g = make_group(spec);
      CharTable tab{ClassData(g)};
      const ClassData& cd = tab.classes();
      std::vector<NormalSubgroup> lattice = all_normal_subgroups(tab);
      for (const NormalSubgroup& n : lattice) {
        if (n.order == 1 || n.order == g.order()) continue;
        ExtensionCatalog cat = find_extending_characters(tab, n.group);
        bool has_nontrivial_extender = !cat.nontrivial_extended.empty();
        CosetAction action(g, n.group);
        for (const Permutation& x : detail::coset_class_reps(action)) {
          ++out.cosets;
          CosetAnalysis a = classify_coset(cd, n.group, x);
          std::string where =
              "N of order " + std::to_string(n.order) + ", coset of class " + cd.label(a.class_k);

          detail::TwoClassFaces faces = detail::evaluate_faces(tab, n, a);
          if (faces.by_scan != faces.by_products || faces.by_scan != faces.by_characters)
            flag(where + ": two-class faces disagree (scan " +
                 std::to_string(faces.by_scan) + ", products " +
                 std::to_string(faces.by_products) + ", characters " +
                 std::to_string(faces.by_characters) + ")");

          bool single_scan = (a.shape == CosetShape::kSingleClass);
          bool single_vanishing = true;
          for (std::uint32_t r = 0; r < tab.num_rows() && single_vanishing; ++r)
            if (!detail::kernel_contains(tab, r, n.classes))
              single_vanishing = tab.value(r, a.class_k).is_zero();
          if (single_scan != single_vanishing)
            flag(where + ": single-class criterion split (scan " + std::to_string(single_scan) +
                 ", vanishing " + std::to_string(single_vanishing) + ")");

          if (single_scan && !is_solvable(n.group))
            flag(where + ": single-class coset over a non-solvable kernel");
          if (a.shape == CosetShape::kTwoClasses && has_nontrivial_extender &&
              a.size_k != a.size_d)
            flag(where + ": extender present but |K| = " + std::to_string(a.size_k) +
                 " != |D| = " + std::to_string(a.size_d));
        }
      }
    } catch (const std::exception& e) {
      out.discrepancies.push_back(spec.str() + ": aborted: " + e.what());
    }
    return out;
  };

  std::vector<GroupOutcome> outcomes(specs.size());
  if (parallel) {
    std::vector<std::future<GroupOutcome>> futures;
    futures.reserve(specs.size());
    for (const GroupSpec& s : specs) futures.push_back(std::async(std::launch::async, sweep_one, s));
    for (std::size_t i = 0; i < futures.size(); ++i) outcomes[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < specs.size(); ++i) outcomes[i] = sweep_one(specs[i]);
  }
  for (GroupOutcome& o : outcomes) {
    stats.cosets += o.cosets;
    for (std::string& d : o.discrepancies) stats.discrepancies.push_back(std::move(d));
  }
  return stats;
}

}  // namespace cosets

#endif
