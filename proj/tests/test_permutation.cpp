#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "cosets/permutation.hpp"

using cosets::Permutation;
using cosets::compose;
using cosets::conjugate_inv;
using cosets::perm_less;

TEST_CASE("composition applies the right factor first") {
  // a swaps 0,1 and b swaps 0,2; (a*b)(0) must be a(b(0)) = a(2) = 2
  Permutation a({1, 0, 2});
  Permutation b({2, 1, 0});
  Permutation ab = compose(a, b);
  REQUIRE(ab[0] == a[b[0]]);
  REQUIRE(ab.images() == std::vector<std::uint32_t>{2, 0, 1});
  Permutation ba = compose(b, a);
  REQUIRE(ba.images() == std::vector<std::uint32_t>{1, 2, 0});
  REQUIRE(ab != ba);
}

TEST_CASE("identity, inverse, and order behave") {
  Permutation e = Permutation::identity(4);
  REQUIRE(e.is_identity());
  REQUIRE(e.order() == 1);

  Permutation c({1, 2, 3, 0});
  REQUIRE(c.order() == 4);
  REQUIRE(compose(c, c.inverse()).is_identity());
  REQUIRE(compose(c.inverse(), c).is_identity());

  Permutation t({1, 0, 3, 2});
  REQUIRE(t.order() == 2);
  REQUIRE(t.inverse() == t);
}

TEST_CASE("conjugation by g inverse then g matches g^-1 x g") {
  Permutation x({1, 0, 2, 3});
  Permutation g({1, 2, 3, 0});
  Permutation got = conjugate_inv(x, g, g.inverse());
  Permutation want = compose(g.inverse(), compose(x, g));
  REQUIRE(got == want);
  // (0 1) conjugated by the 4-cycle becomes (g^-1(0) g^-1(1)) = (3 0)
  REQUIRE(got == Permutation({3, 1, 2, 0}));
}

TEST_CASE("cycle strings name the orbits") {
  REQUIRE(Permutation::identity(3).cycle_string() == "()");
  REQUIRE(Permutation({1, 0, 2}).cycle_string() == "(0 1)");
  REQUIRE(Permutation({1, 2, 0, 4, 3}).cycle_string() == "(0 1 2)(3 4)");
}

TEST_CASE("perm_less orders by degree then images") {
  Permutation small({1, 0});
  Permutation big = Permutation::identity(3);
  REQUIRE(perm_less(small, big));
  REQUIRE(perm_less(Permutation({0, 1, 2}), Permutation({0, 2, 1})));
  REQUIRE_FALSE(perm_less(small, small));
}

TEST_CASE("first_moved finds the first non fixed point") {
  REQUIRE(Permutation({0, 1, 3, 2}).first_moved() == 2);
  REQUIRE(Permutation::identity(5).first_moved() == 5);
}

TEST_CASE("malformed images and degree mismatches are rejected") {
  REQUIRE_THROWS_AS(Permutation({0, 0, 1}), std::runtime_error);
  REQUIRE_THROWS_AS(Permutation({3, 0, 1}), std::runtime_error);
  REQUIRE_THROWS_AS(compose(Permutation({1, 0}), Permutation({1, 0, 2})),
                    std::runtime_error);
}
