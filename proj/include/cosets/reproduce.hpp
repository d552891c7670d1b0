// The worked examples, start to finish: build the group, locate the normal
// subgroup and coset the example is about, classify, and run every theorem
// check, recording the advertised facts as explicit pass/fail lines.  The
// output is deterministic so that repeated runs are byte-identical.
#ifndef COSETS_REPRODUCE_HPP_
#define COSETS_REPRODUCE_HPP_

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cosets/catalog.hpp"
#include "cosets/char_table.hpp"
#include "cosets/coset_check.hpp"
#include "cosets/normal_lattice.hpp"
#include "cosets/report.hpp"
#include "cosets/table_io.hpp"

namespace cosets {

namespace detail {

inline std::size_t unique_lattice_index_of_order(const std::vector<NormalSubgroup>& lattice,
                                                 unsigned long long order) {
  std::size_t found = lattice.size();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice[i].order != order) continue;
    check(found == lattice.size(),
          "several normal subgroups of order " + std::to_string(order) + "; expected one");
    found = i;
  }
  check(found < lattice.size(), "no normal subgroup of order " + std::to_string(order));
  return found;
}

inline std::string sizes_text(const CosetAnalysis& a) {
  return "|K| = " + std::to_string(a.size_k) + ", |D| = " + std::to_string(a.size_d);
}

inline void add_multiplicity_line(TheoremReport& sec, const ClassData& cd,
                                  const NormalSubgroup& n, const CosetAnalysis& a) {
  auto [m1, m2] = coset_sum_multiplicities(cd, n.classes, a.class_k, a.class_d);
  add_line(sec, "class-sum multiplicities of K and D in the products NK agree", m1 == m2,
           "K appears " + std::to_string(m1) + " times, D appears " + std::to_string(m2) +
               " times");
}

inline void retitle(TheoremReport& rep, const std::string& prefix) {
  rep.title = prefix + rep.title;
}

// Wall-clock stamp, recorded only when timing was asked for so that default
// runs stay byte-identical.
class ReportTimer {
 public:
  explicit ReportTimer(bool enabled)
      : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  void stamp(AnalysisReport& rep) const {
    if (!enabled_) return;
    auto elapsed = std::chrono::steady_clock::now() - start_;
    rep.timing_ms = static_cast<unsigned long long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

// The sign-dichotomy consequences for a two-class coset whose kernel has a
// unique nontrivial extending character theta: quotient characters cannot
// separate x from d, extensions of theta take opposite unimodular values,
// and everything else vanishes on both classes.
inline TheoremReport sign_dichotomy_section(const CharTable& tab, const NormalSubgroup& n,
                                            const ExtensionCatalog& cat, std::uint32_t theta,
                                            std::uint32_t K, std::uint32_t D) {
  TheoremReport rep;
  rep.title = "sign dichotomy consequences";
  const ClassData& cd = tab.classes();

  bool agree = true;
  std::string agree_witness;
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    if (!kernel_contains(tab, r, n.classes)) continue;
    if (tab.value(r, K) != tab.value(r, D)) {
      agree = false;
      if (agree_witness.empty())
        agree_witness = "row " + std::to_string(r) + ": chi(x) = " + tab.value(r, K).str() +
                        ", chi(d) = " + tab.value(r, D).str();
    }
  }
  add_line(rep, "every character of the quotient agrees at x and d", agree,
           agree ? "all quotient rows take one value on " + cd.label(K) + " and " + cd.label(D)
                 : agree_witness);

  bool values_ok = true;
  std::string value_witness;
  for (std::uint32_t r : cat.extensions[theta]) {
    Cyclotomic vx = tab.value(r, K), vd = tab.value(r, D);
    bool good = vx.abs_square() == Cyclotomic(Rational(1)) &&
                vd.abs_square() == Cyclotomic(Rational(1)) && vx == -vd;
    if (!good) {
      values_ok = false;
      if (value_witness.empty())
        value_witness = "row " + std::to_string(r) + ": chi(x) = " + vx.str() + ", chi(d) = " +
                        vd.str();
    }
  }
  add_line(rep, "every extension of theta is unimodular at x and d with chi(x) = -chi(d)",
           values_ok,
           values_ok ? std::to_string(cat.extensions[theta].size()) + " extensions checked"
                     : value_witness);

  const ClassData& ncd = cat.n_table.classes();
  bool vanish = true;
  std::string vanish_witness;
  std::size_t others = 0;
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    if (kernel_contains(tab, r, n.classes)) continue;
    std::vector<Cyclotomic> restricted = restrict_row(tab, r, ncd);
    if (!inner_product(ncd, restricted, cat.n_table.row(theta)).is_zero()) continue;
    ++others;
    if (!tab.value(r, K).is_zero() || !tab.value(r, D).is_zero()) {
      vanish = false;
      if (vanish_witness.empty())
        vanish_witness = "row " + std::to_string(r) + ": chi(x) = " + tab.value(r, K).str() +
                         ", chi(d) = " + tab.value(r, D).str();
    }
  }
  add_line(rep, "characters over neither the principal row nor theta vanish at x and d", vanish,
           vanish ? std::to_string(others) + " rows vanish on both classes" : vanish_witness);
  return rep;
}

}  // namespace detail

// C2 x Alt(4): the central involution against the Klein four subgroup.  The
// coset splits 1 + 3 and no nontrivial character of N extends.
inline AnalysisReport reproduce_example_1(const RunSettings& rs) {
  detail::ReportTimer timer(rs.timings);
  PermGroup g = make_group("direct:(cyclic:2),(alt:4)");
  CharTable tab{ClassData(g, rs.element_cap)};
  const ClassData& cd = tab.classes();
  AnalysisReport rep = base_report(rs, "direct:(cyclic:2),(alt:4)", g.order());
  rep.table_hash = table_hash(tab);

  std::vector<NormalSubgroup> lattice = all_normal_subgroups(tab);
  PermGroup derived = derived_subgroup(g);
  check(derived.order() == 4, "expected the derived subgroup to be the Klein four subgroup");
  std::size_t n_index = detail::unique_lattice_index_of_order(lattice, 4);
  const NormalSubgroup& n = lattice[n_index];
  check(derived.is_subgroup_of(n.group), "the order-4 normal subgroup is not the derived subgroup");
  rep.infos.emplace_back("normal subgroup", "order " + std::to_string(n.order) +
                                                " (the derived subgroup), classes " +
                                                detail::class_list(cd, n.classes));

  std::uint32_t central = cd.num_classes();
  std::size_t candidates = 0;
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k)
    if (cd.order_of(k) == 2 && cd.size(k) == 1 && !n.group.contains(cd.rep(k))) {
      central = k;
      ++candidates;
    }
  check(candidates == 1, "expected exactly one central involution outside N");
  const Permutation& x = cd.rep(central);
  CosetAnalysis a = classify_coset(cd, n.group, x);
  rep.cosets.push_back(make_coset_block(cd, n.order, a));

  ExtensionCatalog cat = find_extending_characters(tab, n.group);

  TheoremReport expect;
  expect.title = "advertised facts";
  detail::add_line(expect, "the central involution coset meets exactly two classes",
                   a.shape == CosetShape::kTwoClasses,
                   "shape " + shape_name(a.shape) + ", meets " +
                       detail::class_list(cd, a.coset_classes));
  detail::add_line(expect, "|K| = 1 and |D| = 3", a.size_k == 1 && a.size_d == 3,
                   detail::sizes_text(a));
  detail::add_line(expect, "both halves consist of involutions",
                   cd.order_of(a.class_k) == 2 &&
                       (a.shape != CosetShape::kTwoClasses || cd.order_of(a.class_d) == 2),
                   "K has element order " + std::to_string(cd.order_of(a.class_k)));
  detail::add_line(expect, "the quotient centralizer of Nx has order 6",
                   a.quotient_centralizer == 6,
                   "centralizer order " + std::to_string(a.quotient_centralizer));
  detail::add_line(expect, "only the principal character of N extends",
                   cat.nontrivial_extended.empty(),
                   std::to_string(cat.nontrivial_extended.size()) +
                       " nontrivial rows of N extend");
  if (a.shape == CosetShape::kTwoClasses) detail::add_multiplicity_line(expect, cd, n, a);
  rep.sections.push_back(std::move(expect));

  if (a.shape == CosetShape::kTwoClasses)
    rep.sections.push_back(verify_two_class_coset(tab, n, x));
  timer.stamp(rep);
  return rep;
}

// SL(2,3): both order-3 cosets against the quaternion subgroup split 4 + 4
// and pair with the order-6 classes; the degree-2 character of Q8 extends.
inline AnalysisReport reproduce_example_2(const RunSettings& rs) {
  detail::ReportTimer timer(rs.timings);
  PermGroup g = make_group("sl:2:3");
  CharTable tab{ClassData(g, rs.element_cap)};
  const ClassData& cd = tab.classes();
  AnalysisReport rep = base_report(rs, "sl:2:3", g.order());
  rep.table_hash = table_hash(tab);

  std::vector<NormalSubgroup> lattice = all_normal_subgroups(tab);
  const NormalSubgroup& n = lattice[detail::unique_lattice_index_of_order(lattice, 8)];
  rep.infos.emplace_back("normal subgroup", "order 8, classes " +
                                                detail::class_list(cd, n.classes));
  ExtensionCatalog cat = find_extending_characters(tab, n.group);

  std::vector<std::uint32_t> order3;
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k)
    if (cd.order_of(k) == 3 && !n.group.contains(cd.rep(k))) order3.push_back(k);

  TheoremReport expect;
  expect.title = "advertised facts";
  detail::add_line(expect, "exactly two order-3 classes lie outside N", order3.size() == 2,
                   std::to_string(order3.size()) + " classes of element order 3 outside N");
  detail::add_line(expect, "the unique nontrivial extender of N has degree 2",
                   cat.nontrivial_extended.size() == 1 &&
                       cat.n_table.degree(cat.nontrivial_extended[0]) == 2,
                   std::to_string(cat.nontrivial_extended.size()) + " nontrivial extenders");

  std::vector<std::pair<std::uint32_t, CosetAnalysis>> analyses;
  for (std::uint32_t k : order3) {
    CosetAnalysis a = classify_coset(cd, n.group, cd.rep(k));
    rep.cosets.push_back(make_coset_block(cd, n.order, a));
    detail::add_line(expect, "coset " + cd.label(k) + " meets two classes of size 4 each",
                     a.shape == CosetShape::kTwoClasses && a.size_k == 4 && a.size_d == 4,
                     "shape " + shape_name(a.shape) + ", " + detail::sizes_text(a));
    if (a.shape == CosetShape::kTwoClasses) {
      detail::add_line(expect, "coset " + cd.label(k) + " pairs with an order-6 class",
                       cd.order_of(a.class_d) == 6,
                       "companion " + detail::class_brief(cd, a.class_d));
      detail::add_multiplicity_line(expect, cd, n, a);
    }
    analyses.emplace_back(k, std::move(a));
  }
  rep.sections.push_back(std::move(expect));

  for (const auto& [k, a] : analyses) {
    if (a.shape != CosetShape::kTwoClasses) continue;
    TheoremReport thm_a = verify_two_class_coset(tab, n, cd.rep(k));
    detail::retitle(thm_a, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_a));
    TheoremReport thm_b = verify_extension_pairing(tab, n, cd.rep(k), &cat);
    detail::retitle(thm_b, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_b));
  }
  timer.stamp(rep);
  return rep;
}

// AGammaL(1,8): both order-3 cosets against the order-56 kernel split
// 28 + 28 with companions of order 6; the degree-7 character extends.
inline AnalysisReport reproduce_example_3(const RunSettings& rs) {
  detail::ReportTimer timer(rs.timings);
  PermGroup g = make_group("agammal1:8");
  CharTable tab{ClassData(g, rs.element_cap)};
  const ClassData& cd = tab.classes();
  AnalysisReport rep = base_report(rs, "agammal1:8", g.order());
  rep.table_hash = table_hash(tab);

  std::vector<NormalSubgroup> lattice = all_normal_subgroups(tab);
  const NormalSubgroup& n = lattice[detail::unique_lattice_index_of_order(lattice, 56)];
  rep.infos.emplace_back("normal subgroup", "order 56, classes " +
                                                detail::class_list(cd, n.classes));
  ExtensionCatalog cat = find_extending_characters(tab, n.group);

  std::vector<std::uint32_t> order3;
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k)
    if (cd.order_of(k) == 3 && !n.group.contains(cd.rep(k))) order3.push_back(k);

  TheoremReport expect;
  expect.title = "advertised facts";
  detail::add_line(expect, "exactly two order-3 classes lie outside N", order3.size() == 2,
                   std::to_string(order3.size()) + " classes of element order 3 outside N");
  detail::add_line(expect, "the unique nontrivial extender of N has degree 7",
                   cat.nontrivial_extended.size() == 1 &&
                       cat.n_table.degree(cat.nontrivial_extended[0]) == 7,
                   std::to_string(cat.nontrivial_extended.size()) + " nontrivial extenders");

  std::vector<std::pair<std::uint32_t, CosetAnalysis>> analyses;
  for (std::uint32_t k : order3) {
    CosetAnalysis a = classify_coset(cd, n.group, cd.rep(k));
    rep.cosets.push_back(make_coset_block(cd, n.order, a));
    detail::add_line(expect, "coset " + cd.label(k) + " meets two classes with |K| = |D| = 28",
                     a.shape == CosetShape::kTwoClasses && a.size_k == 28 && a.size_d == 28,
                     "shape " + shape_name(a.shape) + ", " + detail::sizes_text(a));
    if (a.shape == CosetShape::kTwoClasses) {
      detail::add_line(expect, "coset " + cd.label(k) + " pairs with an order-6 class",
                       cd.order_of(a.class_d) == 6,
                       "companion " + detail::class_brief(cd, a.class_d));
      detail::add_multiplicity_line(expect, cd, n, a);
    }
    analyses.emplace_back(k, std::move(a));
  }
  rep.sections.push_back(std::move(expect));

  for (const auto& [k, a] : analyses) {
    if (a.shape != CosetShape::kTwoClasses) continue;
    TheoremReport thm_a = verify_two_class_coset(tab, n, cd.rep(k));
    detail::retitle(thm_a, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_a));
    TheoremReport thm_b = verify_extension_pairing(tab, n, cd.rep(k), &cat);
    detail::retitle(thm_b, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_b));
  }
  timer.stamp(rep);
  return rep;
}

// PGammaL(2,9) over Alt(6): of the two order-4 classes outside, only the
// size-180 one pairs (with the order-8 class); the Steinberg character of
// degree 9 extends, the sign dichotomy holds, and the chief-factor
// pipeline recognizes the socle.
inline AnalysisReport reproduce_example_4(const RunSettings& rs) {
  detail::ReportTimer timer(rs.timings);
  PermGroup g = make_group("pgammal:2:9");
  CharTable tab{ClassData(g, rs.element_cap)};
  const ClassData& cd = tab.classes();
  AnalysisReport rep = base_report(rs, "pgammal:2:9", g.order());
  rep.table_hash = table_hash(tab);

  std::vector<NormalSubgroup> lattice = all_normal_subgroups(tab);
  std::size_t n_index = detail::unique_lattice_index_of_order(lattice, 360);
  const NormalSubgroup& n = lattice[n_index];
  rep.infos.emplace_back("normal subgroup", "order 360, classes " +
                                                detail::class_list(cd, n.classes));
  ExtensionCatalog cat = find_extending_characters(tab, n.group);

  std::vector<std::uint32_t> order4;
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k)
    if (cd.order_of(k) == 4 && !n.group.contains(cd.rep(k))) order4.push_back(k);

  TheoremReport expect;
  expect.title = "advertised facts";
  detail::add_line(expect, "exactly two order-4 classes lie outside N", order4.size() == 2,
                   std::to_string(order4.size()) + " classes of element order 4 outside N");
  detail::add_line(expect, "the unique nontrivial extender of N is the degree-9 row",
                   cat.nontrivial_extended.size() == 1 &&
                       cat.n_table.degree(cat.nontrivial_extended[0]) == 9,
                   std::to_string(cat.nontrivial_extended.size()) + " nontrivial extenders");

  std::vector<std::pair<std::uint32_t, CosetAnalysis>> working;
  for (std::uint32_t k : order4) {
    CosetAnalysis a = classify_coset(cd, n.group, cd.rep(k));
    rep.cosets.push_back(make_coset_block(cd, n.order, a));
    if (a.shape == CosetShape::kTwoClasses) {
      working.emplace_back(k, a);
      detail::add_line(expect,
                       "the working coset has |K| = |D| = 180 with an order-8 companion",
                       a.size_k == 180 && a.size_d == 180 && cd.order_of(a.class_d) == 8,
                       "coset " + cd.label(k) + ": " + detail::sizes_text(a) + ", companion " +
                           detail::class_brief(cd, a.class_d));
      detail::add_multiplicity_line(expect, cd, n, a);
    } else {
      detail::add_line(expect, "the other order-4 coset does not meet exactly two classes",
                       true, "coset " + cd.label(k) + ": shape " + shape_name(a.shape) +
                                 ", meets " + detail::class_list(cd, a.coset_classes));
    }
  }
  detail::add_line(expect, "exactly one order-4 coset meets two classes", working.size() == 1,
                   std::to_string(working.size()) + " of the order-4 cosets work");
  rep.sections.push_back(std::move(expect));

  for (const auto& [k, a] : working) {
    const Permutation& x = cd.rep(k);
    TheoremReport thm_a = verify_two_class_coset(tab, n, x);
    detail::retitle(thm_a, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_a));
    TheoremReport thm_b = verify_extension_pairing(tab, n, x, &cat);
    detail::retitle(thm_b, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_b));
    if (cat.nontrivial_extended.size() == 1) {
      TheoremReport cor = detail::sign_dichotomy_section(tab, n, cat, cat.nontrivial_extended[0],
                                                         a.class_k, a.class_d);
      detail::retitle(cor, "coset " + cd.label(k) + ": ");
      rep.sections.push_back(std::move(cor));
    }
    TheoremReport thm_c = verify_chief_factor_pipeline(tab, lattice, n_index, x, &cat);
    detail::retitle(thm_c, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_c));
  }
  timer.stamp(rep);
  return rep;
}

// PGammaL(2,27) over PSL(2,27), the scaled-up analogue of the previous
// example: among the four order-6 classes outside the socle, exactly two
// pair, each with an order-12 class of the same size.  One report block
// per working coset.
inline std::vector<AnalysisReport> reproduce_stretch(const RunSettings& rs) {
  detail::ReportTimer timer(rs.timings);
  PermGroup g = make_group("pgammal:2:27");
  CharTable tab{ClassData(g, rs.element_cap)};
  const ClassData& cd = tab.classes();

  std::vector<NormalSubgroup> lattice = all_normal_subgroups(tab);
  std::size_t n_index = detail::unique_lattice_index_of_order(lattice, 9828);
  const NormalSubgroup& n = lattice[n_index];
  ExtensionCatalog cat = find_extending_characters(tab, n.group);

  std::vector<std::uint32_t> order6;
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k)
    if (cd.order_of(k) == 6 && !n.group.contains(cd.rep(k))) order6.push_back(k);
  std::vector<std::pair<std::uint32_t, CosetAnalysis>> hits;
  for (std::uint32_t k : order6) {
    CosetAnalysis a = classify_coset(cd, n.group, cd.rep(k));
    if (a.shape == CosetShape::kTwoClasses) hits.emplace_back(k, std::move(a));
  }

  std::vector<AnalysisReport> blocks;
  for (const auto& [k, a] : hits) {
    AnalysisReport rep = base_report(rs, "pgammal:2:27", g.order());
    rep.table_hash = table_hash(tab);
    rep.infos.emplace_back("normal subgroup", "order 9828, classes " +
                                                  detail::class_list(cd, n.classes));
    rep.cosets.push_back(make_coset_block(cd, n.order, a));

    TheoremReport expect;
    expect.title = "advertised facts";
    detail::add_line(expect, "four order-6 classes lie outside N", order6.size() == 4,
                     std::to_string(order6.size()) + " classes of element order 6 outside N");
    detail::add_line(expect, "exactly two of the order-6 cosets meet two classes",
                     hits.size() == 2, std::to_string(hits.size()) + " cosets work");
    detail::add_line(expect, "this coset pairs order 6 with order 12 at equal size",
                     cd.order_of(a.class_d) == 12 && a.size_k == a.size_d,
                     "coset " + cd.label(k) + ": " + detail::sizes_text(a) + ", companion " +
                         detail::class_brief(cd, a.class_d));
    detail::add_multiplicity_line(expect, cd, n, a);
    rep.sections.push_back(std::move(expect));

    const Permutation& x = cd.rep(k);
    TheoremReport thm_a = verify_two_class_coset(tab, n, x);
    detail::retitle(thm_a, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_a));
    TheoremReport thm_b = verify_extension_pairing(tab, n, x, &cat);
    detail::retitle(thm_b, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_b));
    TheoremReport thm_c = verify_chief_factor_pipeline(tab, lattice, n_index, x, &cat);
    detail::retitle(thm_c, "coset " + cd.label(k) + ": ");
    rep.sections.push_back(std::move(thm_c));

    timer.stamp(rep);
    blocks.push_back(std::move(rep));
  }
  check(blocks.size() == 2, "expected exactly two working order-6 cosets, found " +
                                std::to_string(blocks.size()));
  return blocks;
}

struct ReproduceOutcome {
  std::vector<std::pair<std::string, AnalysisReport>> blocks;  // label, report
  bool pass = true;
};

inline ReproduceOutcome reproduce_examples(const RunSettings& rs, bool include_stretch) {
  ReproduceOutcome out;
  auto add = [&out](std::string label, AnalysisReport rep) {
    out.pass = out.pass && rep.pass();
    out.blocks.emplace_back(std::move(label), std::move(rep));
  };
  add("example 1", reproduce_example_1(rs));
  add("example 2", reproduce_example_2(rs));
  add("example 3", reproduce_example_3(rs));
  add("example 4", reproduce_example_4(rs));
  if (include_stretch) {
    std::vector<AnalysisReport> stretch = reproduce_stretch(rs);
    for (std::size_t i = 0; i < stretch.size(); ++i)
      add("stretch " + std::to_string(i + 1), std::move(stretch[i]));
  }
  return out;
}

}  // namespace cosets

#endif
