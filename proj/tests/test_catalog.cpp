#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "cosets/catalog.hpp"
#include "cosets/perm_group.hpp"

using namespace cosets;

TEST_CASE("family constructions hit the textbook orders") {
  struct Row {
    const char* spec;
    unsigned long long order;
  };
  const Row rows[] = {
      {"cyclic:1", 1},      {"cyclic:12", 12},   {"sym:2", 2},
      {"sym:5", 120},       {"alt:3", 3},        {"alt:6", 360},
      {"dihedral:3", 6},    {"dihedral:16", 32}, {"q8", 8},
      {"sl:2:3", 24},       {"agl1:8", 56},      {"agammal1:8", 168},
      {"psl:2:2", 6},       {"psl:2:4", 60},     {"psl:2:7", 168},
      {"psl:2:9", 360},     {"pgl:2:3", 24},     {"pgl:2:5", 120},
      {"pgl:2:9", 720},     {"pgammal:2:4", 120}, {"pgammal:2:9", 1440},
      {"pgammal:2:27", 58968},
  };
  for (const Row& r : rows) {
    PermGroup g = make_group(r.spec);
    INFO(r.spec);
    REQUIRE(g.order() == r.order);
  }
}

TEST_CASE("direct products multiply orders and keep factors disjoint") {
  PermGroup g = make_group("direct:(cyclic:2),(alt:4)");
  REQUIRE(g.order() == 24);
  REQUIRE(g.degree() == 6);
  PermGroup h = make_group("direct:(sym:3),(cyclic:4)");
  REQUIRE(h.order() == 24);
}

TEST_CASE("spec strings round trip through GroupSpec") {
  GroupSpec s = GroupSpec::parse("psl:2:7");
  REQUIRE(s.str() == "psl:2:7");
  REQUIRE(GroupSpec::parse("direct:(cyclic:2),(alt:4)").str() ==
          "direct:(cyclic:2),(alt:4)");
}

TEST_CASE("unknown families and bad parameters are rejected") {
  REQUIRE_THROWS_AS(make_group("frobnicate:5"), std::runtime_error);
  REQUIRE_THROWS_AS(make_group("psl:3:4"), std::runtime_error);
  REQUIRE_THROWS_AS(make_group("psl:2:6"), std::runtime_error);
  REQUIRE_THROWS_AS(make_group("cyclic:0"), std::runtime_error);
  REQUIRE_THROWS_AS(make_group(""), std::runtime_error);
}

TEST_CASE("projective groups act faithfully on the projective line") {
  // degree q+1, and PSL has index gcd(2, q-1) in PGL
  REQUIRE(make_group("psl:2:7").degree() == 8);
  REQUIRE(make_group("pgl:2:7").order() == 336);
  REQUIRE(make_group("psl:2:8").order() == make_group("pgl:2:8").order());
  PermGroup psl = make_group("psl:2:9");
  PermGroup pgl = make_group("pgl:2:9");
  REQUIRE(psl.is_subgroup_of(pgl));
}

TEST_CASE("the sweep list grows with the order bound and stays sorted") {
  std::vector<GroupSpec> small = catalog_sweep_list(24);
  std::vector<GroupSpec> mid = catalog_sweep_list(200);
  std::vector<GroupSpec> large = catalog_sweep_list(2000);
  REQUIRE(small.size() == 46);
  REQUIRE(mid.size() == 60);
  REQUIRE(large.size() == 72);
  unsigned long long last = 0;
  for (const GroupSpec& s : large) {
    PermGroup g = make_group(s);
    REQUIRE(g.order() <= 2000);
    REQUIRE(g.order() >= last);
    last = g.order();
  }
}
