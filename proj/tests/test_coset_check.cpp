#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "cosets/catalog.hpp"
#include "cosets/char_table.hpp"
#include "cosets/class_data.hpp"
#include "cosets/coset_check.hpp"
#include "cosets/normal_lattice.hpp"

using namespace cosets;

namespace {

struct Setup {
  CharTable tab;
  std::vector<NormalSubgroup> lattice;

  explicit Setup(const char* spec)
      : tab{ClassData(make_group(spec))}, lattice(all_normal_subgroups(tab)) {}

  std::size_t normal_of_order(unsigned long long order) const {
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (lattice[i].order == order) return i;
    FAIL("no normal subgroup of the requested order");
    return 0;
  }
};

}  // namespace

TEST_CASE("coset classification covers all three shapes") {
  Setup s3("sym:3");
  const NormalSubgroup& a3 = s3.lattice[s3.normal_of_order(3)];
  CosetAnalysis single = classify_coset(s3.tab.classes(), a3.group, Permutation({1, 0, 2}));
  REQUIRE(single.shape == CosetShape::kSingleClass);
  REQUIRE(single.size_k == 3);
  REQUIRE(single.coset_classes == std::vector<std::uint32_t>{1});
  REQUIRE(single.quotient_centralizer == 2);

  Setup s4("sym:4");
  const NormalSubgroup& v4 = s4.lattice[s4.normal_of_order(4)];
  CosetAnalysis two = classify_coset(s4.tab.classes(), v4.group, Permutation({1, 0, 2, 3}));
  REQUIRE(two.shape == CosetShape::kTwoClasses);
  REQUIRE(s4.tab.classes().label(two.class_k) == "2b");
  REQUIRE(s4.tab.classes().label(two.class_d) == "4a");
  REQUIRE(two.size_k == 6);
  REQUIRE(two.size_d == 6);

  Setup pgl("pgl:2:9");
  const NormalSubgroup& psl = pgl.lattice[pgl.normal_of_order(360)];
  std::uint32_t c8a = pgl.tab.classes().find_label("8a");
  CosetAnalysis spread =
      classify_coset(pgl.tab.classes(), psl.group, pgl.tab.classes().rep(c8a));
  REQUIRE(spread.shape == CosetShape::kSpread);
  REQUIRE(spread.coset_classes.size() == 5);
}

TEST_CASE("shape names match the report vocabulary") {
  REQUIRE(shape_name(CosetShape::kSingleClass) == "single-class");
  REQUIRE(shape_name(CosetShape::kTwoClasses) == "two-classes");
  REQUIRE(shape_name(CosetShape::kSpread) == "spread");
}

TEST_CASE("two-class battery passes on the worked cases and rejects others") {
  Setup sl("sl:2:3");
  const NormalSubgroup& q8 = sl.lattice[sl.normal_of_order(8)];
  const ClassData& cd = sl.tab.classes();
  Permutation x = cd.rep(cd.find_label("3a"));
  TheoremReport rep = verify_two_class_coset(sl.tab, q8, x);
  REQUIRE(rep.applicable);
  REQUIRE(rep.pass());
  REQUIRE(rep.lines.size() == 6);

  Setup s4("sym:4");
  const NormalSubgroup& v4 = s4.lattice[s4.normal_of_order(4)];
  REQUIRE(verify_two_class_coset(s4.tab, v4, Permutation({1, 0, 2, 3})).pass());

  Setup s3("sym:3");
  const NormalSubgroup& a3 = s3.lattice[s3.normal_of_order(3)];
  REQUIRE_THROWS_WITH(verify_two_class_coset(s3.tab, a3, Permutation({1, 0, 2})),
                      Catch::Matchers::ContainsSubstring("exactly two classes"));
}

TEST_CASE("the single-class biconditional holds on both sides") {
  // left true: transposition coset of alt(3) in sym(3)
  Setup s3("sym:3");
  const NormalSubgroup& a3 = s3.lattice[s3.normal_of_order(3)];
  TheoremReport both_true =
      verify_single_class_criterion(s3.tab, a3, Permutation({1, 0, 2}));
  REQUIRE(both_true.pass());

  // left false: a two-class coset still satisfies the equivalence
  Setup s4("sym:4");
  const NormalSubgroup& v4 = s4.lattice[s4.normal_of_order(4)];
  TheoremReport both_false =
      verify_single_class_criterion(s4.tab, v4, Permutation({1, 0, 2, 3}));
  REQUIRE(both_false.pass());
}

TEST_CASE("extension catalogs list who extends and how often") {
  Setup ex1("direct:(cyclic:2),(alt:4)");
  ExtensionCatalog cat1 =
      find_extending_characters(ex1.tab, ex1.lattice[ex1.normal_of_order(4)].group);
  REQUIRE(cat1.extensions[0].size() == 6);
  REQUIRE(cat1.nontrivial_extended.empty());

  Setup sl("sl:2:3");
  ExtensionCatalog cat2 =
      find_extending_characters(sl.tab, sl.lattice[sl.normal_of_order(8)].group);
  REQUIRE(cat2.extensions[0].size() == 3);
  REQUIRE(cat2.nontrivial_extended == std::vector<std::uint32_t>{4});
  REQUIRE(cat2.n_table.degree(4) == 2);
  REQUIRE(cat2.extensions[4].size() == 3);

  Setup ag("agammal1:8");
  ExtensionCatalog cat3 =
      find_extending_characters(ag.tab, ag.lattice[ag.normal_of_order(56)].group);
  REQUIRE(cat3.nontrivial_extended.size() == 1);
  REQUIRE(cat3.n_table.degree(cat3.nontrivial_extended[0]) == 7);
  REQUIRE(cat3.extensions[cat3.nontrivial_extended[0]].size() == 3);
}

TEST_CASE("extension pairing verifies the degree-2 case of sl(2,3)") {
  Setup sl("sl:2:3");
  const NormalSubgroup& q8 = sl.lattice[sl.normal_of_order(8)];
  const ClassData& cd = sl.tab.classes();
  Permutation x = cd.rep(cd.find_label("3a"));
  TheoremReport rep = verify_extension_pairing(sl.tab, q8, x);
  REQUIRE(rep.applicable);
  REQUIRE(rep.pass());
  REQUIRE(rep.lines.size() == 8);
  // a prebuilt catalog gives the identical report
  ExtensionCatalog cat = find_extending_characters(sl.tab, q8.group);
  TheoremReport again = verify_extension_pairing(sl.tab, q8, x, &cat);
  REQUIRE(again.lines.size() == rep.lines.size());
  for (std::size_t i = 0; i < rep.lines.size(); ++i) {
    REQUIRE(again.lines[i].name == rep.lines[i].name);
    REQUIRE(again.lines[i].pass == rep.lines[i].pass);
  }
}

TEST_CASE("chief-factor pipeline runs fully on pgammal(2,9)") {
  Setup pg("pgammal:2:9");
  std::size_t ni = pg.normal_of_order(360);
  const ClassData& cd = pg.tab.classes();
  Permutation x = cd.rep(cd.find_label("4c"));
  TheoremReport rep = verify_chief_factor_pipeline(pg.tab, pg.lattice, ni, x);
  REQUIRE(rep.applicable);
  REQUIRE(rep.pass());
  REQUIRE(rep.lines.size() == 12);
}

TEST_CASE("chief-factor pipeline bows out when hypotheses fail") {
  Setup s3("sym:3");
  std::size_t a3 = s3.normal_of_order(3);
  TheoremReport solvable =
      verify_chief_factor_pipeline(s3.tab, s3.lattice, a3, Permutation({1, 0, 2}));
  REQUIRE_FALSE(solvable.applicable);
  REQUIRE(solvable.pass());
  REQUIRE_THAT(solvable.skip_reason, Catch::Matchers::ContainsSubstring("solvable"));

  Setup pgl("pgl:2:9");
  std::size_t psl = pgl.normal_of_order(360);
  const ClassData& cd = pgl.tab.classes();
  TheoremReport spread = verify_chief_factor_pipeline(pgl.tab, pgl.lattice, psl,
                                                      cd.rep(cd.find_label("8a")));
  REQUIRE_FALSE(spread.applicable);
  REQUIRE(spread.pass());
  REQUIRE_THAT(spread.skip_reason,
               Catch::Matchers::ContainsSubstring("rather than two-classes"));
}

TEST_CASE("class-product identities branch on the support") {
  Setup sl("sl:2:3");
  const ClassData& cd = sl.tab.classes();
  std::uint32_t K = cd.find_label("3a");

  TheoremReport in_k = product_two_class_check(sl.tab, K, cd.find_label("1a"));
  REQUIRE(in_k.applicable);
  REQUIRE(in_k.pass());
  REQUIRE_THAT(in_k.lines[0].name, Catch::Matchers::ContainsSubstring("KC = K"));

  TheoremReport in_d = product_two_class_check(sl.tab, K, cd.find_label("2a"));
  REQUIRE(in_d.pass());
  REQUIRE_THAT(in_d.lines[0].name, Catch::Matchers::ContainsSubstring("KC = D"));

  TheoremReport pair = product_two_class_check(sl.tab, K, cd.find_label("4a"));
  REQUIRE(pair.pass());
  REQUIRE_THAT(pair.lines[0].name, Catch::Matchers::ContainsSubstring("K union D"));

  TheoremReport no_k = product_two_class_check(sl.tab, K, cd.find_label("3a"));
  REQUIRE(no_k.pass());
  REQUIRE_THAT(no_k.lines[0].name, Catch::Matchers::ContainsSubstring("neither is K"));

  Setup a5("alt:5");
  const ClassData& acd = a5.tab.classes();
  TheoremReport wide =
      product_two_class_check(a5.tab, acd.find_label("2a"), acd.find_label("5a"));
  REQUIRE_FALSE(wide.applicable);
  REQUIRE(wide.pass());
  REQUIRE_THAT(wide.skip_reason, Catch::Matchers::ContainsSubstring("meets 3 classes"));
}

TEST_CASE("character-derived product coefficients equal the counted ones") {
  for (const char* spec : {"sym:3", "q8", "sym:4"}) {
    INFO(spec);
    CharTable tab{ClassData(make_group(spec))};
    const ClassData& cd = tab.classes();
    for (std::uint32_t i = 0; i < cd.num_classes(); ++i)
      for (std::uint32_t j = 0; j < cd.num_classes(); ++j)
        for (std::uint32_t k = 0; k < cd.num_classes(); ++k)
          REQUIRE(class_product_coefficient_from_characters(tab, i, j, k) ==
                  BigInt(cd.structure_constant(i, j, k)));
  }
}

TEST_CASE("coset sum multiplicities count the coset halves") {
  Setup sl("sl:2:3");
  const ClassData& cd = sl.tab.classes();
  const NormalSubgroup& q8 = sl.lattice[sl.normal_of_order(8)];
  std::uint32_t K = cd.find_label("3a"), D = cd.find_label("6b");
  auto [m1, m2] = coset_sum_multiplicities(cd, q8.classes, K, D);
  REQUIRE(m1 == 4);
  REQUIRE(m2 == 4);
}
