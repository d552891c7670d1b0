// Executable form of the coset-in-two-classes theory: classify which
// conjugacy classes a coset Nx meets, verify the character identities that
// hold in the two-class case, track which characters of N extend to G, and
// run the pipeline for non-solvable N through chief factors and the
// Steinberg character.
//
// Every verdict is computed over exact cyclotomics.  Reports carry both
// sides of each identity so a failure is a reproducible witness, not a
// boolean.
#ifndef COSETS_COSET_CHECK_HPP_
#define COSETS_COSET_CHECK_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cosets/char_table.hpp"
#include "cosets/class_data.hpp"
#include "cosets/common.hpp"
#include "cosets/cyclotomic.hpp"
#include "cosets/normal_lattice.hpp"
#include "cosets/perm_group.hpp"
#include "cosets/permutation.hpp"
#include "cosets/rational.hpp"

namespace cosets {

enum class CosetShape { kSingleClass, kTwoClasses, kSpread };

inline std::string shape_name(CosetShape s) {
  switch (s) {
    case CosetShape::kSingleClass: return "single-class";
    case CosetShape::kTwoClasses: return "two-classes";
    case CosetShape::kSpread: return "spread";
  }
  fail("unknown coset shape");
}

struct CosetAnalysis {
  CosetShape shape = CosetShape::kSpread;
  std::uint32_t class_k = 0;                  // class of x itself
  std::uint32_t class_d = 0;                  // companion class when two-classes
  std::vector<std::uint32_t> coset_classes;   // every class meeting Nx, ascending
  unsigned long long size_k = 0;
  unsigned long long size_d = 0;
  unsigned long long quotient_centralizer = 0;  // centralizer order of Nx in G/N
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TheoremReport {
  std::string title;
  bool applicable = true;
  std::string skip_reason;  // set when not applicable
  std::vector<CheckLine> lines;

  bool pass() const {
    if (!applicable) return true;
    for (const CheckLine& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

namespace detail {

inline void add_line(TheoremReport& rep, std::string name, bool pass, std::string detail) {
  rep.lines.push_back(CheckLine{std::move(name), pass, std::move(detail)});
}

inline void check_normal_in(const PermGroup& g, const PermGroup& n) {
  check(n.is_subgroup_of(g), "expected a subgroup");
  for (const Permutation& s : n.generators())
    for (const Permutation& t : g.generators())
      check(n.contains(conjugate_inv(s, t, t.inverse())),
            "expected a normal subgroup of the full group");
}

inline std::string class_brief(const ClassData& cd, std::uint32_t k) {
  return cd.label(k) + " (order " + std::to_string(cd.order_of(k)) + ", size " +
         std::to_string(cd.size(k)) + ")";
}

inline std::string class_list(const ClassData& cd, const std::vector<std::uint32_t>& ks) {
  std::string s = "{";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) s += ", ";
    s += cd.label(ks[i]);
  }
  return s + "}";
}

}  // namespace detail

// Classes met by the coset Nx, found by exhaustive scan of {m*x : m in N}.
inline CosetAnalysis classify_coset(const ClassData& cd, const PermGroup& n,
                                    const Permutation& x) {
  detail::check_normal_in(cd.group(), n);
  check(!n.contains(x), "coset classification requires a representative outside the subgroup");
  CosetAnalysis a;
  std::set<std::uint32_t> seen;
  for (const Permutation& m : n.elements()) seen.insert(cd.class_of(compose(m, x)));
  a.coset_classes.assign(seen.begin(), seen.end());
  a.class_k = cd.class_of(x);
  a.size_k = cd.size(a.class_k);
  if (a.coset_classes.size() == 1) {
    a.shape = CosetShape::kSingleClass;
  } else if (a.coset_classes.size() == 2) {
    a.shape = CosetShape::kTwoClasses;
    a.class_d = (a.coset_classes[0] == a.class_k) ? a.coset_classes[1] : a.coset_classes[0];
    a.size_d = cd.size(a.class_d);
  } else {
    a.shape = CosetShape::kSpread;
  }
  CosetAction action(cd.group(), n);
  PermGroup q = action.quotient();
  ClassData qcd(q);
  a.quotient_centralizer = qcd.centralizer_size(qcd.class_of(action.image(x)));
  return a;
}

// The structure constant of classes i*j at k recovered from character data:
// (|Ci||Cj|/|G|) * sum over rows of chi(i)chi(j)conj(chi(k))/chi(1).
// Always a nonnegative integer; anything else is an arithmetic bug.
inline BigInt class_product_coefficient_from_characters(const CharTable& tab, std::uint32_t i,
                                                        std::uint32_t j, std::uint32_t k) {
  const ClassData& cd = tab.classes();
  Cyclotomic sum = Rational(0);
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    Rational inv_degree(BigInt(1), BigInt(tab.degree(r)));
    sum = sum + tab.value(r, i) * tab.value(r, j) * tab.value(r, k).conj() * Cyclotomic(inv_degree);
  }
  Rational scale(BigInt(cd.size(i)) * BigInt(cd.size(j)), BigInt(cd.group().order()));
  sum = sum * Cyclotomic(scale);
  check(sum.is_rational(), "character-derived class-product coefficient is irrational");
  Rational v = sum.rational_value();
  check(v.is_integer() && v.sign() >= 0,
        "character-derived class-product coefficient " + v.str() + " is not a count");
  return v.num;
}

namespace detail {

// Rows whose kernel contains every class in n_classes (the characters of
// the quotient by that normal subgroup, viewed in G).
inline bool kernel_contains(const CharTable& tab, std::uint32_t r,
                            const std::vector<std::uint32_t>& n_classes) {
  std::vector<std::uint32_t> ker = tab.kernel_classes(r);
  return std::includes(ker.begin(), ker.end(), n_classes.begin(), n_classes.end());
}

inline std::vector<std::uint32_t> support_union_with(const ClassData& cd,
                                                     const std::vector<std::uint32_t>& n_classes,
                                                     std::uint32_t target) {
  std::set<std::uint32_t> u;
  for (std::uint32_t c : n_classes)
    for (std::uint32_t e : cd.product_support(c, target)) u.insert(e);
  return std::vector<std::uint32_t>(u.begin(), u.end());
}

inline std::vector<std::uint32_t> support_union_from_characters(
    const CharTable& tab, const std::vector<std::uint32_t>& n_classes, std::uint32_t target) {
  std::set<std::uint32_t> u;
  for (std::uint32_t c : n_classes)
    for (std::uint32_t e = 0; e < tab.num_rows(); ++e)
      if (class_product_coefficient_from_characters(tab, c, target, e) > 0) u.insert(e);
  return std::vector<std::uint32_t>(u.begin(), u.end());
}

}  // namespace detail

// Full condition battery for a coset meeting exactly two classes: the set
// condition, the class-sum product condition, the character identities and
// the centralizer identity, plus a re-derivation of the product condition
// from character data alone.
inline TheoremReport verify_two_class_coset(const CharTable& tab, const NormalSubgroup& n,
                                            const Permutation& x) {
  const ClassData& cd = tab.classes();
  CosetAnalysis a = classify_coset(cd, n.group, x);
  check(a.shape == CosetShape::kTwoClasses,
        "two-class verification requires a coset meeting exactly two classes, got " +
            shape_name(a.shape));
  TheoremReport rep;
  rep.title = "two-class coset conditions";
  const std::uint32_t K = a.class_k, D = a.class_d;
  const Rational size_k(BigInt(a.size_k)), size_d(BigInt(a.size_d));

  detail::add_line(rep, "coset lies in K union D and meets both", true,
                   "Nx meets " + detail::class_list(cd, a.coset_classes) + " with K = " +
                       detail::class_brief(cd, K) + ", D = " + detail::class_brief(cd, D));

  std::vector<std::uint32_t> want{std::min(K, D), std::max(K, D)};
  std::vector<std::uint32_t> nk = detail::support_union_with(cd, n.classes, K);
  std::vector<std::uint32_t> nd = detail::support_union_with(cd, n.classes, D);
  detail::add_line(rep, "class-sum products NK and ND both cover exactly K union D",
                   nk == want && nd == want,
                   "NK = " + detail::class_list(cd, nk) + ", ND = " + detail::class_list(cd, nd) +
                       ", K union D = " + detail::class_list(cd, want));

  bool c1 = true;
  std::string c1_witness;
  std::size_t quotient_rows = 0;
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    if (!detail::kernel_contains(tab, r, n.classes)) continue;
    ++quotient_rows;
    if (tab.value(r, K) != tab.value(r, D)) {
      c1 = false;
      if (c1_witness.empty())
        c1_witness = "row " + std::to_string(r) + ": chi(x) = " + tab.value(r, K).str() +
                     ", chi(d) = " + tab.value(r, D).str();
    }
  }
  detail::add_line(rep, "chi(x) = chi(d) for every character of the quotient", c1,
                   c1 ? std::to_string(quotient_rows) + " quotient rows agree on K and D"
                      : c1_witness);

  bool c2 = true;
  std::string c2_witness;
  std::size_t faithful_rows = 0;
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    if (detail::kernel_contains(tab, r, n.classes)) continue;
    ++faithful_rows;
    Cyclotomic lhs = Cyclotomic(size_k) * tab.value(r, K) + Cyclotomic(size_d) * tab.value(r, D);
    if (!lhs.is_zero()) {
      c2 = false;
      if (c2_witness.empty())
        c2_witness = "row " + std::to_string(r) + ": |K|chi(x) + |D|chi(d) = " + lhs.str();
    }
  }
  detail::add_line(
      rep, "|K|chi(x) + |D|chi(d) = 0 for every character not factoring through the quotient", c2,
      c2 ? std::to_string(faithful_rows) + " rows satisfy " + std::to_string(a.size_k) +
               "*chi(x) + " + std::to_string(a.size_d) + "*chi(d) = 0"
         : c2_witness);

  unsigned long long total = a.size_k + a.size_d;
  bool c3 = (cd.group().order() % total == 0) &&
            a.quotient_centralizer == cd.group().order() / total;
  detail::add_line(rep, "quotient centralizer order equals |G|/(|K|+|D|)", c3,
                   "centralizer of Nx in G/N has order " + std::to_string(a.quotient_centralizer) +
                       ", |G|/(|K|+|D|) = " + std::to_string(cd.group().order()) + "/" +
                       std::to_string(total));

  std::vector<std::uint32_t> nk_char = detail::support_union_from_characters(tab, n.classes, K);
  std::vector<std::uint32_t> nd_char = detail::support_union_from_characters(tab, n.classes, D);
  detail::add_line(rep, "product condition re-derived from character data agrees",
                   nk_char == nk && nd_char == nd,
                   "character-derived NK = " + detail::class_list(cd, nk_char) + ", ND = " +
                       detail::class_list(cd, nd_char));
  return rep;
}

// Both sides of the single-class criterion, evaluated independently: the
// coset scan on the left, the vanishing condition on the right, and the
// biconditional as the verdict.
inline TheoremReport verify_single_class_criterion(const CharTable& tab, const NormalSubgroup& n,
                                                   const Permutation& x) {
  const ClassData& cd = tab.classes();
  CosetAnalysis a = classify_coset(cd, n.group, x);
  bool left = (a.shape == CosetShape::kSingleClass);

  bool right = true;
  std::string witness;
  std::size_t faithful_rows = 0;
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    if (detail::kernel_contains(tab, r, n.classes)) continue;
    ++faithful_rows;
    if (!tab.value(r, a.class_k).is_zero()) {
      right = false;
      if (witness.empty())
        witness = "row " + std::to_string(r) + " has chi(x) = " + tab.value(r, a.class_k).str();
    }
  }

  TheoremReport rep;
  rep.title = "single-class criterion";
  detail::add_line(
      rep, "coset is a single class iff chi(x) = 0 beyond the quotient rows", left == right,
      "coset scan: " + shape_name(a.shape) + " (" + detail::class_list(cd, a.coset_classes) +
          "); vanishing scan over " + std::to_string(faithful_rows) + " rows: " +
          (right ? "all zero at x" : witness));
  return rep;
}

// Which characters of N extend to G.  extensions[s] holds the G-row
// indices restricting to N-row s (equal degree, multiplicity one, pointwise
// equal under fusion).
struct ExtensionCatalog {
  CharTable n_table;
  std::vector<std::vector<std::uint32_t>> extensions;
  std::vector<std::uint32_t> nontrivial_extended;  // N-rows != principal with an extension

  explicit ExtensionCatalog(CharTable t) : n_table(std::move(t)) {}
};

inline ExtensionCatalog find_extending_characters(const CharTable& tab, const PermGroup& n) {
  detail::check_normal_in(tab.classes().group(), n);
  ExtensionCatalog cat{CharTable(ClassData(n))};
  const ClassData& ncd = cat.n_table.classes();
  cat.extensions.assign(cat.n_table.num_rows(), {});
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    std::vector<Cyclotomic> restricted = restrict_row(tab, r, ncd);
    for (std::uint32_t s = 0; s < cat.n_table.num_rows(); ++s) {
      if (tab.degree(r) != cat.n_table.degree(s)) continue;
      Cyclotomic ip = inner_product(ncd, restricted, cat.n_table.row(s));
      if (ip != Cyclotomic(Rational(1))) continue;
      bool pointwise = true;
      for (std::uint32_t k = 0; k < ncd.num_classes() && pointwise; ++k)
        pointwise = (restricted[k] == cat.n_table.value(s, k));
      if (pointwise) cat.extensions[s].push_back(r);
    }
  }
  for (std::uint32_t s = 1; s < cat.n_table.num_rows(); ++s)
    if (!cat.extensions[s].empty()) cat.nontrivial_extended.push_back(s);
  return cat;
}

// Checks for a two-class coset in the presence of an extending character:
// equal class sizes, unimodular opposite values on K and D for every
// extension, the product decomposition of the rows lying over theta, and
// vanishing of everything else.
inline TheoremReport verify_extension_pairing(const CharTable& tab, const NormalSubgroup& n,
                                              const Permutation& x,
                                              const ExtensionCatalog* prebuilt = nullptr) {
  const ClassData& cd = tab.classes();
  CosetAnalysis a = classify_coset(cd, n.group, x);
  check(a.shape == CosetShape::kTwoClasses,
        "extension pairing requires a coset meeting exactly two classes, got " +
            shape_name(a.shape));
  std::optional<ExtensionCatalog> local;
  if (!prebuilt) local.emplace(find_extending_characters(tab, n.group));
  const ExtensionCatalog& cat = prebuilt ? *prebuilt : *local;
  check(!cat.nontrivial_extended.empty(),
        "extension pairing requires a nontrivial character of N that extends to G");

  TheoremReport rep;
  rep.title = "extension pairing";
  const std::uint32_t K = a.class_k, D = a.class_d;

  detail::add_line(rep, "exactly one nontrivial character of N extends",
                   cat.nontrivial_extended.size() == 1,
                   std::to_string(cat.nontrivial_extended.size()) +
                       " nontrivial N-rows extend; using the first (N-row " +
                       std::to_string(cat.nontrivial_extended[0]) + ", degree " +
                       std::to_string(cat.n_table.degree(cat.nontrivial_extended[0])) + ")");
  const std::uint32_t theta = cat.nontrivial_extended[0];

  detail::add_line(rep, "|K| = |D|", a.size_k == a.size_d,
                   "|K| = " + std::to_string(a.size_k) + ", |D| = " + std::to_string(a.size_d));

  bool unimodular = true, opposite = true;
  std::string uni_witness, opp_witness;
  for (std::uint32_t r : cat.extensions[theta]) {
    Cyclotomic vx = tab.value(r, K), vd = tab.value(r, D);
    if (vx.abs_square() != Cyclotomic(Rational(1))) {
      unimodular = false;
      if (uni_witness.empty())
        uni_witness = "row " + std::to_string(r) + ": |chi(x)|^2 = " + vx.abs_square().str();
    }
    if (vx != -vd) {
      opposite = false;
      if (opp_witness.empty())
        opp_witness =
            "row " + std::to_string(r) + ": chi(x) = " + vx.str() + ", chi(d) = " + vd.str();
    }
  }
  std::string ext_count = std::to_string(cat.extensions[theta].size()) + " extensions";
  detail::add_line(rep, "every extension of theta has |chi(x)| = 1", unimodular,
                   unimodular ? ext_count + " all unimodular at x" : uni_witness);
  detail::add_line(rep, "every extension of theta has chi(x) = -chi(d)", opposite,
                   opposite ? ext_count + " all change sign from K to D" : opp_witness);

  // Rows over theta are exactly the products of one fixed extension with
  // the quotient rows: pairwise distinct, norm one, nothing missed.
  const ClassData& ncd = cat.n_table.classes();
  std::vector<std::uint32_t> over_theta;
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    std::vector<Cyclotomic> restricted = restrict_row(tab, r, ncd);
    Cyclotomic ip = inner_product(ncd, restricted, cat.n_table.row(theta));
    check(ip.is_rational() && ip.rational_value().is_integer() &&
              ip.rational_value().sign() >= 0,
          "restriction multiplicity must be a nonnegative integer");
    if (!ip.is_zero()) over_theta.push_back(r);
  }
  std::uint32_t hat = cat.extensions[theta].at(0);
  std::vector<std::uint32_t> beta_rows;
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r)
    if (detail::kernel_contains(tab, r, n.classes)) beta_rows.push_back(r);

  std::vector<std::vector<Cyclotomic>> products;
  for (std::uint32_t b : beta_rows) {
    std::vector<Cyclotomic> p;
    for (std::uint32_t k = 0; k < cd.num_classes(); ++k)
      p.push_back(tab.value(hat, k) * tab.value(b, k));
    products.push_back(std::move(p));
  }
  bool distinct = true;
  for (std::size_t i = 0; i < products.size() && distinct; ++i)
    for (std::size_t j = i + 1; j < products.size() && distinct; ++j)
      distinct = !(products[i] == products[j]);
  bool norms = true;
  std::string norm_witness;
  for (std::size_t i = 0; i < products.size(); ++i) {
    Cyclotomic nrm = inner_product(cd, products[i], products[i]);
    if (nrm != Cyclotomic(Rational(1))) {
      norms = false;
      if (norm_witness.empty())
        norm_witness = "product with quotient row " + std::to_string(beta_rows[i]) +
                       " has norm " + nrm.str();
    }
  }
  std::vector<bool> matched(over_theta.size(), false);
  bool exhaust = products.size() == over_theta.size();
  for (const auto& p : products) {
    bool found = false;
    for (std::size_t i = 0; i < over_theta.size() && !found; ++i) {
      if (matched[i]) continue;
      bool same = true;
      for (std::uint32_t k = 0; k < cd.num_classes() && same; ++k)
        same = (p[k] == tab.value(over_theta[i], k));
      if (same) matched[i] = found = true;
    }
    if (!found) exhaust = false;
  }
  detail::add_line(rep, "products of one extension with the quotient rows are pairwise distinct",
                   distinct, std::to_string(products.size()) + " products from G-row " +
                                 std::to_string(hat));
  detail::add_line(rep, "each such product has norm 1", norms,
                   norms ? "all norms exactly 1" : norm_witness);
  detail::add_line(rep, "the products exhaust the rows lying over theta", exhaust,
                   std::to_string(products.size()) + " products vs " +
                       std::to_string(over_theta.size()) + " rows over theta");

  bool vanish = true;
  std::string vanish_witness;
  std::size_t others = 0;
  for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
    if (detail::kernel_contains(tab, r, n.classes)) continue;
    if (std::find(over_theta.begin(), over_theta.end(), r) != over_theta.end()) continue;
    ++others;
    if (!tab.value(r, K).is_zero() || !tab.value(r, D).is_zero()) {
      vanish = false;
      if (vanish_witness.empty())
        vanish_witness = "row " + std::to_string(r) + ": chi(x) = " + tab.value(r, K).str() +
                         ", chi(d) = " + tab.value(r, D).str();
    }
  }
  detail::add_line(rep, "rows over neither the principal character nor theta vanish at x and d",
                   vanish,
                   vanish ? std::to_string(others) + " rows vanish on K and D" : vanish_witness);
  return rep;
}

// Identities for the product of two class sums whose support has at most
// two classes.  Branches: single class K, single class D, or the pair
// {K, D}; larger support is reported as out of scope, not as failure.
inline TheoremReport product_two_class_check(const CharTable& tab, std::uint32_t K,
                                             std::uint32_t C) {
  const ClassData& cd = tab.classes();
  TheoremReport rep;
  rep.title = "class-product identities";
  std::vector<std::uint32_t> support = cd.product_support(K, C);
  const Rational size_k(BigInt(cd.size(K))), size_c(BigInt(cd.size(C)));
  const Rational kc = size_k * size_c;

  if (support.size() > 2) {
    rep.applicable = false;
    rep.skip_reason = "product of " + cd.label(K) + " and " + cd.label(C) + " meets " +
                      std::to_string(support.size()) + " classes " +
                      detail::class_list(cd, support) + "; the identities cover at most two";
    return rep;
  }

  auto row_identity = [&](std::uint32_t r, const std::vector<std::pair<std::uint32_t,
                                                                       unsigned long long>>&
                                                coeffs) {
    // |K||C| chi(k) chi(c) == chi(1) * sum of coeff * |E| * chi(e)
    Cyclotomic lhs = Cyclotomic(kc) * tab.value(r, K) * tab.value(r, C);
    Cyclotomic rhs = Rational(0);
    for (const auto& [e, coeff] : coeffs)
      rhs = rhs + Cyclotomic(Rational(BigInt(coeff) * BigInt(cd.size(e)))) * tab.value(r, e);
    rhs = rhs * Cyclotomic(Rational(BigInt(tab.degree(r))));
    return std::make_pair(lhs, rhs);
  };
  auto all_rows_identity = [&](const std::vector<std::pair<std::uint32_t, unsigned long long>>&
                                   coeffs, std::string name) {
    bool ok = true;
    std::string witness;
    for (std::uint32_t r = 0; r < tab.num_rows(); ++r) {
      auto [lhs, rhs] = row_identity(r, coeffs);
      if (lhs != rhs) {
        ok = false;
        if (witness.empty())
          witness = "row " + std::to_string(r) + ": lhs = " + lhs.str() + ", rhs = " + rhs.str();
        break;
      }
    }
    detail::add_line(rep, std::move(name), ok,
                     ok ? "identity holds on all " + std::to_string(tab.num_rows()) + " rows"
                        : witness);
  };

  if (support.size() == 1 && support[0] == K) {
    unsigned long long aa = cd.structure_constant(K, C, K);
    detail::add_line(rep, "single-class branch KC = K with a = |C|", aa == cd.size(C),
                     "a = " + std::to_string(aa) + ", |C| = " + std::to_string(cd.size(C)));
    all_rows_identity({{K, aa}}, "character identity |K||C|chi(k)chi(c) = chi(1) a |K| chi(k)");
  } else if (support.size() == 1) {
    std::uint32_t D = support[0];
    unsigned long long bb = cd.structure_constant(K, C, D);
    detail::add_line(rep, "single-class branch KC = D with b|D| = |K||C|",
                     bb * cd.size(D) == cd.size(K) * cd.size(C),
                     "b = " + std::to_string(bb) + ", D = " + detail::class_brief(cd, D));
    all_rows_identity({{D, bb}}, "character identity |K||C|chi(k)chi(c) = chi(1) b |D| chi(d)");
  } else {
    bool has_k = (support[0] == K || support[1] == K);
    std::uint32_t first = support[0], second = support[1];
    if (has_k && second == K) std::swap(first, second);  // put K first when present
    unsigned long long aa = cd.structure_constant(K, C, first);
    unsigned long long bb = cd.structure_constant(K, C, second);
    detail::add_line(rep, has_k ? "two-class branch KC = K union D"
                                : "two-class branch KC = E1 union E2 (neither is K)",
                     true,
                     "support " + detail::class_list(cd, support) + ", coefficients " +
                         std::to_string(aa) + " and " + std::to_string(bb));
    detail::add_line(rep, "counting identity a|E1| + b|E2| = |K||C|",
                     aa * cd.size(first) + bb * cd.size(second) == cd.size(K) * cd.size(C),
                     std::to_string(aa) + "*" + std::to_string(cd.size(first)) + " + " +
                         std::to_string(bb) + "*" + std::to_string(cd.size(second)) + " vs " +
                         std::to_string(cd.size(K)) + "*" + std::to_string(cd.size(C)));
    all_rows_identity({{first, aa}, {second, bb}},
                      "character identity |K||C|chi(k)chi(c) = chi(1)(a|E1|chi(e1) + b|E2|chi(e2))");

    // Converse: recover every product coefficient from the table alone and
    // confirm the support and the counts match the combinatorial scan.
    bool converse = true;
    std::string conv_witness;
    for (std::uint32_t e = 0; e < cd.num_classes() && converse; ++e) {
      BigInt derived = class_product_coefficient_from_characters(tab, K, C, e);
      BigInt counted(0);
      if (e == first) counted = BigInt(aa);
      if (e == second) counted = BigInt(bb);
      if (derived != counted) {
        converse = false;
        conv_witness = "class " + cd.label(e) + ": derived " + derived.str() + ", counted " +
                       counted.str();
      }
    }
    detail::add_line(rep, "support re-derived from character data agrees", converse,
                     converse ? "all " + std::to_string(cd.num_classes()) +
                                    " coefficients match the counts"
                              : conv_witness);
  }
  return rep;
}

// Multiplicities of the K and D class sums in the product of K's class sum
// with all of N's (used as a spot check on example instances).
inline std::pair<unsigned long long, unsigned long long> coset_sum_multiplicities(
    const ClassData& cd, const std::vector<std::uint32_t>& n_classes, std::uint32_t K,
    std::uint32_t D) {
  unsigned long long m1 = 0, m2 = 0;
  for (std::uint32_t c : n_classes) {
    m1 += cd.structure_constant(K, c, K);
    m2 += cd.structure_constant(K, c, D);
  }
  return {m1, m2};
}

// Pipeline for non-solvable N: equal class sizes, odd-characteristic Lie
// flags on every non-abelian chief factor inside N, then the extension
// pairing with theta taken as the Steinberg row of N.
inline TheoremReport verify_chief_factor_pipeline(const CharTable& tab,
                                                  const std::vector<NormalSubgroup>& lattice,
                                                  std::size_t n_index, const Permutation& x,
                                                  const ExtensionCatalog* prebuilt = nullptr) {
  const ClassData& cd = tab.classes();
  const NormalSubgroup& n = lattice.at(n_index);
  CosetAnalysis a = classify_coset(cd, n.group, x);

  TheoremReport rep;
  rep.title = "chief-factor pipeline";
  if (is_solvable(n.group)) {
    rep.applicable = false;
    rep.skip_reason = "the normal subgroup (order " + std::to_string(n.order) +
                      ") is solvable; the pipeline concerns non-solvable normal subgroups";
    return rep;
  }
  if (a.shape != CosetShape::kTwoClasses) {
    rep.applicable = false;
    rep.skip_reason = "the coset has shape " + shape_name(a.shape) +
                      " rather than two-classes, so the hypotheses are not met";
    return rep;
  }

  detail::add_line(rep, "|K| = |D|", a.size_k == a.size_d,
                   "|K| = " + std::to_string(a.size_k) + ", |D| = " + std::to_string(a.size_d));

  ChiefSeries series = chief_series_through(lattice, n_index);
  bool all_lie = true;
  std::string factors_text;
  std::size_t n_chain_pos = 0;
  for (std::size_t i = 0; i < series.chain.size(); ++i)
    if (series.chain[i] == n_index) n_chain_pos = i;
  for (std::size_t i = 0; i < n_chain_pos; ++i) {
    const ChiefStep& st = series.steps[i];
    if (st.abelian) continue;
    if (!factors_text.empty()) factors_text += "; ";
    factors_text += "order " + std::to_string(st.factor_order) + " = " + st.name +
                    (st.lie_type_odd_char ? " (odd characteristic)" : " (no odd-characteristic form)");
    if (!st.lie_type_odd_char) all_lie = false;
  }
  check(!factors_text.empty(), "non-solvable subgroup with no non-abelian chief factor");
  detail::add_line(rep, "every non-abelian chief factor inside N is Lie type, odd characteristic",
                   all_lie, factors_text);

  // Steinberg row of N: the unique irreducible of degree q once the step
  // below N is recognized as psl(2,q).
  unsigned long long q = 0;
  for (std::size_t i = 0; i < n_chain_pos; ++i)
    if (!series.steps[i].abelian && series.steps[i].upper_order == n.order)
      q = series.steps[i].psl2_field;
  check(q != 0,
        "Steinberg selection needs the subgroup itself recognized as psl(2,q); chief factors: " +
            factors_text);
  std::optional<ExtensionCatalog> local;
  if (!prebuilt) local.emplace(find_extending_characters(tab, n.group));
  const ExtensionCatalog& cat = prebuilt ? *prebuilt : *local;
  std::vector<std::uint32_t> steinberg_rows;
  for (std::uint32_t s = 0; s < cat.n_table.num_rows(); ++s)
    if (cat.n_table.degree(s) == q) steinberg_rows.push_back(s);
  detail::add_line(rep, "the degree-" + std::to_string(q) + " row of N is unique",
                   steinberg_rows.size() == 1,
                   std::to_string(steinberg_rows.size()) + " rows of degree " + std::to_string(q));
  bool steinberg_extends =
      steinberg_rows.size() == 1 && !cat.extensions[steinberg_rows[0]].empty();
  detail::add_line(rep, "the Steinberg row extends to the full group", steinberg_extends,
                   steinberg_extends
                       ? std::to_string(cat.extensions[steinberg_rows[0]].size()) + " extensions"
                       : "no extension found");

  TheoremReport pairing = verify_extension_pairing(tab, n, x, &cat);
  for (CheckLine& l : pairing.lines) {
    l.name = "pairing: " + l.name;
    rep.lines.push_back(std::move(l));
  }
  return rep;
}

}  // namespace cosets

#endif
