#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "cosets/cyclotomic.hpp"
#include "cosets/rational.hpp"

using namespace cosets;

namespace {

Cyclotomic zeta(unsigned long long n, long long k = 1) {
  return Cyclotomic::root_of_unity(n, k);
}

}  // namespace

TEST_CASE("roots of unity have the right multiplicative order") {
  Cyclotomic z = zeta(5);
  Cyclotomic p = z;
  for (int i = 1; i < 5; ++i) {
    REQUIRE_FALSE(p.is_rational());
    p = p * z;
  }
  REQUIRE(p == Cyclotomic(Rational(1)));
}

TEST_CASE("the primitive root sums vanish") {
  // 1 + z + z^2 + ... + z^{p-1} = 0 for prime p
  for (unsigned long long p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    Cyclotomic s = Rational(0);
    for (unsigned long long k = 0; k < p; ++k) s = s + zeta(p, static_cast<long long>(k));
    REQUIRE(s.is_zero());
  }
}

TEST_CASE("conductor reduction recognizes rational values in disguise") {
  // z6 = 1 + z3 reduced to the conductor-3 basis; and z4^2 = -1
  REQUIRE(zeta(4, 2) == Cyclotomic(Rational(-1)));
  REQUIRE(zeta(6, 3) == Cyclotomic(Rational(-1)));
  REQUIRE((zeta(6) * zeta(6, 5)) == Cyclotomic(Rational(1)));
  REQUIRE(zeta(8, 2) == zeta(4));
}

TEST_CASE("golden ratio arithmetic inside Q(zeta5)") {
  // b = -z5^2 - z5^3 and b' = -z5 - z5^4 solve x^2 - x - 1 = 0 jointly
  Cyclotomic b = Cyclotomic(Rational(0)) - zeta(5, 2) - zeta(5, 3);
  Cyclotomic bp = Cyclotomic(Rational(0)) - zeta(5, 1) - zeta(5, 4);
  REQUIRE(b + bp == Cyclotomic(Rational(1)));
  REQUIRE(b * bp == Cyclotomic(Rational(-1)));
  REQUIRE(b * b == b + Cyclotomic(Rational(1)));
  REQUIRE(b.conj() == b);  // fixed by complex conjugation, it is real
}

TEST_CASE("conjugation inverts every root") {
  for (long long k = 0; k < 12; ++k) REQUIRE(zeta(12, k).conj() == zeta(12, -k));
  Cyclotomic mix = zeta(12, 5) + Cyclotomic(Rational(BigInt(2), BigInt(3)));
  REQUIRE(mix.conj().conj() == mix);
}

TEST_CASE("embedding into a larger conductor preserves values") {
  Cyclotomic z3 = zeta(3);
  Cyclotomic in12 = z3.embedded(12);
  REQUIRE(in12 == z3);
  REQUIRE(in12 == zeta(12, 4));
  REQUIRE_THROWS_AS(z3.embedded(7), std::runtime_error);
}

TEST_CASE("abs_square multiplies by the conjugate") {
  REQUIRE(zeta(7, 3).abs_square() == Cyclotomic(Rational(1)));
  Cyclotomic v = zeta(5) + Cyclotomic(Rational(2));
  REQUIRE(v.abs_square() == v * v.conj());
  // |2 + z5|^2 = 5 + 2(z5 + z5^4) is real but irrational
  REQUIRE_FALSE(v.abs_square().is_rational());
  REQUIRE(v.abs_square().conj() == v.abs_square());
}

TEST_CASE("string form reduces to the power basis, highest exponent first") {
  REQUIRE(Cyclotomic(Rational(0)).str() == "0");
  REQUIRE(Cyclotomic(Rational(BigInt(-2), BigInt(3))).str() == "-2/3");
  // z12^5 lies outside the degree-4 power basis; mod x^4 - x^2 + 1 it folds
  REQUIRE(zeta(12, 5).str() == "z12^3-z12");
  Cyclotomic v = zeta(8) - Cyclotomic(Rational(1)) + zeta(8, 3);
  REQUIRE(v.str() == "z8^3+z8-1");
  Cyclotomic w = zeta(5, 2) * Cyclotomic(Rational(BigInt(1), BigInt(2)));
  REQUIRE(w.str() == "1/2*z5^2");
}

TEST_CASE("rational parsing handles signs and fractions") {
  REQUIRE(parse_rational("7") == Rational(7));
  REQUIRE(parse_rational("-3/4") == Rational(BigInt(-3), BigInt(4)));
  REQUIRE(parse_rational("+2") == Rational(2));
  REQUIRE(parse_rational("10/4") == Rational(BigInt(5), BigInt(2)));
  REQUIRE_THROWS_AS(parse_rational("3/0"), std::runtime_error);
  REQUIRE_THROWS_AS(parse_rational("x"), std::runtime_error);
  REQUIRE_THROWS_AS(parse_rational(""), std::runtime_error);
}

TEST_CASE("cyclotomic polynomials are computed exactly") {
  // Phi_12 = x^4 - x^2 + 1
  const std::vector<BigInt>& phi12 = cyclotomic_polynomial(12);
  std::vector<long long> got;
  for (const BigInt& c : phi12) got.push_back(static_cast<long long>(c));
  REQUIRE(got == std::vector<long long>{1, 0, -1, 0, 1});
  REQUIRE(cyclotomic_polynomial(1).size() == 2);
  REQUIRE(euler_phi(12) == 4);
  REQUIRE(euler_phi(1) == 1);
}
