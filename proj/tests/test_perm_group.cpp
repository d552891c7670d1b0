#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "cosets/perm_group.hpp"
#include "cosets/permutation.hpp"

using namespace cosets;

namespace {

PermGroup sym5() {
  return PermGroup({Permutation({1, 0, 2, 3, 4}), Permutation({1, 2, 3, 4, 0})});
}

PermGroup sym4() {
  return PermGroup({Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
}

PermGroup alt5() {
  return PermGroup({Permutation({1, 2, 0, 3, 4}), Permutation({1, 2, 3, 4, 0})});
}

}  // namespace

TEST_CASE("schreier sims finds the right orders") {
  REQUIRE(sym5().order() == 120);
  REQUIRE(sym4().order() == 24);
  REQUIRE(alt5().order() == 60);
  REQUIRE(PermGroup::trivial(7).order() == 1);
  REQUIRE(PermGroup::trivial(7).is_trivial());
}

TEST_CASE("membership agrees with parity in alt(5)") {
  PermGroup a5 = alt5();
  REQUIRE(a5.contains(Permutation({1, 2, 0, 3, 4})));
  REQUIRE(a5.contains(Permutation({1, 0, 3, 2, 4})));
  REQUIRE_FALSE(a5.contains(Permutation({1, 0, 2, 3, 4})));
  REQUIRE(sym5().contains(Permutation({1, 0, 2, 3, 4})));
}

TEST_CASE("element enumeration indexes every member exactly once") {
  PermGroup g = sym4();
  const std::vector<Permutation>& elems = g.elements();
  REQUIRE(elems.size() == 24);
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    REQUIRE(g.element_index(elems[i]) == i);
  REQUIRE_THROWS_AS(g.element_index(Permutation::identity(5)), std::runtime_error);
}

TEST_CASE("element cap refuses oversized enumerations") {
  REQUIRE_THROWS_WITH(sym5().elements(50),
                      Catch::Matchers::ContainsSubstring("exceeds element cap"));
  REQUIRE_NOTHROW(sym5().elements(120));
}

TEST_CASE("subgroup and equality predicates") {
  PermGroup s5 = sym5();
  PermGroup a5 = alt5();
  REQUIRE(a5.is_subgroup_of(s5));
  REQUIRE_FALSE(s5.is_subgroup_of(a5));
  REQUIRE(a5.same_group(alt5()));
  REQUIRE_FALSE(a5.same_group(s5));
}

TEST_CASE("derived subgroup of sym(4) is alt(4) and the series reaches 1") {
  PermGroup s4 = sym4();
  PermGroup d1 = derived_subgroup(s4);
  REQUIRE(d1.order() == 12);
  REQUIRE(d1.contains(Permutation({1, 2, 0, 3})));
  REQUIRE_FALSE(d1.contains(Permutation({1, 0, 2, 3})));

  std::vector<PermGroup> series = derived_series(s4);
  std::vector<unsigned long long> orders;
  for (const PermGroup& g : series) orders.push_back(g.order());
  REQUIRE(orders == std::vector<unsigned long long>{24, 12, 4, 1});
  REQUIRE(is_solvable(s4));
  REQUIRE_FALSE(is_solvable(alt5()));
  REQUIRE(derived_subgroup(alt5()).order() == 60);
}

TEST_CASE("coset action builds the quotient and maps representatives") {
  PermGroup s4 = sym4();
  PermGroup a4({Permutation({1, 2, 0, 3}), Permutation({1, 0, 3, 2})});
  REQUIRE(a4.order() == 12);
  CosetAction act(s4, a4);
  REQUIRE(act.quotient().order() == 2);
  // a transposition lands in the nonidentity coset
  Permutation t({1, 0, 2, 3});
  REQUIRE(act.image(t)[0] == 1);
  REQUIRE(act.image(Permutation::identity(4)).is_identity());
  // the representative of the coset the image names differs from t by N
  Permutation rep = act.rep(act.image(t)[0]);
  REQUIRE(a4.contains(compose(rep.inverse(), t)));
}

TEST_CASE("coset action rejects non subgroups and non normal subgroups") {
  PermGroup a3({Permutation({1, 2, 0})});
  PermGroup flip({Permutation({1, 0, 2})});
  REQUIRE_THROWS_WITH(CosetAction(a3, flip),
                      Catch::Matchers::ContainsSubstring("not a subgroup"));
  PermGroup s4 = sym4();
  PermGroup stab3({Permutation({1, 0, 2, 3}), Permutation({1, 2, 0, 3})});
  REQUIRE_THROWS_WITH(CosetAction(s4, stab3),
                      Catch::Matchers::ContainsSubstring("not normal"));
}

TEST_CASE("random elements stay inside the group and cover it") {
  PermGroup g = sym4();
  std::mt19937_64 rng(kDefaultSeed);
  std::set<Permutation, bool (*)(const Permutation&, const Permutation&)> seen(perm_less);
  for (int i = 0; i < 400; ++i) {
    Permutation r = g.random_element(rng);
    REQUIRE(g.contains(r));
    seen.insert(r);
  }
  // 400 uniform draws from 24 elements miss one with probability ~ 1e-7
  REQUIRE(seen.size() == 24);
}
