#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "cosets/catalog.hpp"
#include "cosets/char_table.hpp"
#include "cosets/class_data.hpp"
#include "cosets/modp.hpp"

using namespace cosets;

namespace {

CharTable table_of(const char* spec) { return CharTable{ClassData(make_group(spec))}; }

std::vector<unsigned long long> degrees(const CharTable& t) {
  std::vector<unsigned long long> d;
  for (std::uint32_t r = 0; r < t.num_rows(); ++r) d.push_back(t.degree(r));
  return d;
}

}  // namespace

TEST_CASE("degree patterns of the small standards") {
  REQUIRE(degrees(table_of("sym:3")) == std::vector<unsigned long long>{1, 1, 2});
  REQUIRE(degrees(table_of("sym:4")) == std::vector<unsigned long long>{1, 1, 2, 3, 3});
  REQUIRE(degrees(table_of("alt:5")) == std::vector<unsigned long long>{1, 3, 3, 4, 5});
  REQUIRE(degrees(table_of("q8")) == std::vector<unsigned long long>{1, 1, 1, 1, 2});
  REQUIRE(degrees(table_of("sl:2:3")) ==
          std::vector<unsigned long long>{1, 1, 1, 2, 2, 2, 3});
  REQUIRE(degrees(table_of("psl:2:7")) ==
          std::vector<unsigned long long>{1, 3, 3, 6, 7, 8});
}

TEST_CASE("the principal character comes first and is identically one") {
  CharTable t = table_of("alt:5");
  for (std::uint32_t k = 0; k < t.classes().num_classes(); ++k)
    REQUIRE(t.value(0, k) == Cyclotomic(Rational(1)));
}

TEST_CASE("sym(3) table values are the classical ones") {
  CharTable t = table_of("sym:3");
  const ClassData& cd = t.classes();
  std::uint32_t c2 = cd.find_label("2a"), c3 = cd.find_label("3a");
  // sign character
  REQUIRE(t.value(1, c2) == Cyclotomic(Rational(-1)));
  REQUIRE(t.value(1, c3) == Cyclotomic(Rational(1)));
  // degree-2 character
  REQUIRE(t.value(2, c2).is_zero());
  REQUIRE(t.value(2, c3) == Cyclotomic(Rational(-1)));
}

TEST_CASE("row orthogonality holds with conjugate weighting") {
  CharTable t = table_of("sl:2:3");
  const ClassData& cd = t.classes();
  for (std::uint32_t r = 0; r < t.num_rows(); ++r)
    for (std::uint32_t s = 0; s < t.num_rows(); ++s) {
      Cyclotomic ip = inner_product(cd, t.row(r), t.row(s));
      REQUIRE(ip == Cyclotomic(Rational(r == s ? 1 : 0)));
    }
}

TEST_CASE("column orthogonality recovers centralizer orders") {
  CharTable t = table_of("sym:4");
  const ClassData& cd = t.classes();
  for (std::uint32_t i = 0; i < cd.num_classes(); ++i)
    for (std::uint32_t j = 0; j < cd.num_classes(); ++j) {
      Cyclotomic s = Rational(0);
      for (std::uint32_t r = 0; r < t.num_rows(); ++r)
        s = s + t.value(r, i) * t.value(r, cd.inverse_class(j));
      Rational want = (i == j) ? Rational(BigInt(cd.centralizer_size(i))) : Rational(0);
      REQUIRE(s == Cyclotomic(want));
    }
}

TEST_CASE("kernels cut out the expected normal subgroups") {
  CharTable t = table_of("sym:3");
  REQUIRE(t.kernel_group(0).order() == 6);
  REQUIRE(t.kernel_group(1).order() == 3);
  REQUIRE(t.kernel_group(2).order() == 1);
  REQUIRE(t.kernel_classes(1) == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("find_row locates rows by exact values") {
  CharTable t = table_of("sym:3");
  REQUIRE(t.find_row(t.row(2)) == 2);
  std::vector<Cyclotomic> bogus(t.classes().num_classes(), Cyclotomic(Rational(9)));
  REQUIRE_THROWS_AS(t.find_row(bogus), std::runtime_error);
}

TEST_CASE("restriction to a point stabilizer follows the branching rule") {
  PermGroup s4 = make_group("sym:4");
  CharTable big{ClassData(s4)};
  // stabilizer of the last point, a copy of sym(3)
  PermGroup s3({Permutation({1, 0, 2, 3}), Permutation({1, 2, 0, 3})});
  CharTable small{ClassData(s3)};
  std::vector<std::vector<unsigned long long>> mult;
  for (std::uint32_t r = 0; r < big.num_rows(); ++r)
    mult.push_back(decompose_into(small, restrict_row(big, r, small.classes())));
  std::vector<std::vector<unsigned long long>> want{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}};
  REQUIRE(mult == want);
}

TEST_CASE("classes_in_subgroup picks out the classes a subgroup meets") {
  CharTable t = table_of("sym:4");
  PermGroup v4({Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
  std::vector<std::uint32_t> cls = classes_in_subgroup(t.classes(), v4);
  REQUIRE(cls == std::vector<std::uint32_t>{0, t.classes().find_label("2a")});
}

TEST_CASE("the splitting prime respects order, exponent, and class count") {
  REQUIRE(smallest_splitting_prime(6, 6) == 7);
  REQUIRE(smallest_splitting_prime(42, 168) == 43);
  REQUIRE(smallest_splitting_prime(2, 8, 8) == 11);
  for (const char* spec : {"sym:4", "alt:5", "q8", "sl:2:3", "dihedral:6"}) {
    CharTable t = table_of(spec);
    INFO(spec);
    REQUIRE(t.modulus() % t.classes().exponent() == 1);
    REQUIRE(t.modulus() > t.num_rows());
    REQUIRE(t.group().order() % t.modulus() != 0);
  }
}

TEST_CASE("prime factorization helper returns distinct ascending primes") {
  REQUIRE(prime_factors(360) == std::vector<u64>{2, 3, 5});
  REQUIRE(prime_factors(1) == std::vector<u64>{});
  REQUIRE(prime_factors(97) == std::vector<u64>{97});
}

TEST_CASE("degree and order sums match across the catalog sample") {
  for (const char* spec : {"dihedral:10", "pgl:2:5", "agl1:8"}) {
    CharTable t = table_of(spec);
    unsigned long long total = 0;
    for (std::uint32_t r = 0; r < t.num_rows(); ++r) {
      REQUIRE(t.group().order() % t.degree(r) == 0);
      total += t.degree(r) * t.degree(r);
    }
    INFO(spec);
    REQUIRE(total == t.group().order());
    REQUIRE(t.num_rows() == t.classes().num_classes());
  }
}
