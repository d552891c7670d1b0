#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "cosets/catalog.hpp"
#include "cosets/search.hpp"

using namespace cosets;

namespace {

std::vector<GroupSearchResult> run(const std::vector<std::string>& specs) {
  std::vector<GroupSpec> parsed;
  for (const std::string& s : specs) parsed.push_back(GroupSpec::parse(s));
  return search_groups(parsed);
}

}  // namespace

TEST_CASE("searching sl(2,3) finds the two order-3 coset hits") {
  std::vector<GroupSearchResult> res = run({"sl:2:3"});
  REQUIRE(res.size() == 1);
  REQUIRE(res[0].ok);
  REQUIRE(res[0].order == 24);
  // cosets of the center give further hits; the quaternion kernel gives two
  std::size_t over_q8 = 0;
  for (const SearchFinding& f : res[0].findings) {
    REQUIRE(f.checks_pass);
    if (f.shape == CosetShape::kTwoClasses && f.n_order == 8) {
      ++over_q8;
      REQUIRE(f.size_k == 4);
      REQUIRE(f.size_d == 4);
      REQUIRE(f.coset_class.front() == '3');
    }
  }
  REQUIRE(over_q8 == 2);
}

TEST_CASE("searching the C2 x alt(4) example isolates the small hit") {
  std::vector<GroupSearchResult> res = run({"direct:(cyclic:2),(alt:4)"});
  REQUIRE(res[0].ok);
  bool saw = false;
  for (const SearchFinding& f : res[0].findings)
    if (f.shape == CosetShape::kTwoClasses && f.n_order == 4 && f.size_k == 1 && f.size_d == 3)
      saw = true;
  REQUIRE(saw);
}

TEST_CASE("pgammal(2,9) yields exactly one two-class coset") {
  std::vector<GroupSearchResult> res = run({"pgammal:2:9"});
  REQUIRE(res[0].ok);
  REQUIRE(res[0].findings.size() == 6);
  std::size_t two_class = 0;
  for (const SearchFinding& f : res[0].findings)
    if (f.shape == CosetShape::kTwoClasses) {
      ++two_class;
      REQUIRE(f.n_order == 360);
      REQUIRE(f.size_k == 180);
      REQUIRE(f.size_d == 180);
    }
  REQUIRE(two_class == 1);
}

TEST_CASE("a bad spec fails its own entry without stopping the batch") {
  std::vector<GroupSpec> specs{GroupSpec::parse("sym:3"), GroupSpec::parse("psl:2:6"),
                               GroupSpec::parse("cyclic:4")};
  std::vector<GroupSearchResult> res = search_groups(specs);
  REQUIRE(res.size() == 3);
  REQUIRE(res[0].ok);
  REQUIRE_FALSE(res[1].ok);
  REQUIRE_FALSE(res[1].error.empty());
  REQUIRE(res[2].ok);
}

TEST_CASE("small orders admit two-class cosets only with singleton halves") {
  // every order-6-or-less hit pairs two central classes
  std::vector<GroupSearchResult> res = search_groups(catalog_sweep_list(6));
  std::size_t two_class = 0;
  for (const GroupSearchResult& g : res) {
    REQUIRE(g.ok);
    for (const SearchFinding& f : g.findings)
      if (f.shape == CosetShape::kTwoClasses) {
        ++two_class;
        REQUIRE(f.size_k == 1);
        REQUIRE(f.size_d == 1);
      }
  }
  REQUIRE(two_class > 0);
}

TEST_CASE("the order-24 census matches the frozen shape counts") {
  std::vector<GroupSearchResult> res = search_groups(catalog_sweep_list(24));
  REQUIRE(res.size() == 46);
  std::size_t single = 0, two = 0, spread = 0;
  for (const GroupSearchResult& g : res) {
    REQUIRE(g.ok);
    REQUIRE(g.error.empty());
    for (const SearchFinding& f : g.findings) {
      REQUIRE(f.checks_pass);
      if (f.shape == CosetShape::kSingleClass) ++single;
      if (f.shape == CosetShape::kTwoClasses) ++two;
      if (f.shape == CosetShape::kSpread) ++spread;
    }
  }
  REQUIRE(single == 42);
  REQUIRE(two == 102);
  REQUIRE(spread == 79);
}

TEST_CASE("the sweep cross-validates every characterization up to order 24") {
  SweepStats stats = sweep_catalog(24);
  REQUIRE(stats.groups == 46);
  REQUIRE(stats.cosets == 223);
  REQUIRE(stats.discrepancies.empty());
}

TEST_CASE("parallel search returns results in input order") {
  std::vector<GroupSpec> specs{GroupSpec::parse("sym:4"), GroupSpec::parse("q8"),
                               GroupSpec::parse("dihedral:5")};
  std::vector<GroupSearchResult> seq = search_groups(specs, false);
  std::vector<GroupSearchResult> par = search_groups(specs, true);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    REQUIRE(seq[i].spec == par[i].spec);
    REQUIRE(seq[i].findings.size() == par[i].findings.size());
    for (std::size_t j = 0; j < seq[i].findings.size(); ++j) {
      REQUIRE(seq[i].findings[j].coset_class == par[i].findings[j].coset_class);
      REQUIRE(seq[i].findings[j].detail == par[i].findings[j].detail);
    }
  }
}
