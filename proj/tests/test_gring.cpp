#include <catch_amalgamated.hpp>

#include "polarcsm/gring.hpp"
#include "polarcsm/random.hpp"

using namespace polarcsm;

namespace {

GClass random_class(SplitMix64& rng) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(rng.below(4)) + 1);
  for (auto& x : c) x = static_cast<std::int64_t>(rng.below(11)) - 5;
  return GClass(IntPoly(c));
}

}  // namespace

TEST_CASE("sigma and its inverse", "[gring]") {
  IntPoly p{3, -4, 6, 12};
  RatPoly s = sigma(p);
  CHECK(s.coeff(2) == Rational(3));
  CHECK(s.coeff(3) == Rational(2));
  CHECK(sigma_inv(s) == p);
  CHECK_THROWS_AS(sigma_inv(RatPoly({0, 0, Rational(1, 3)})), InexactDivision);
  CHECK(sigma_inv(RatPoly({0, 0, Rational(1, 2)})) == IntPoly({0, 0, 1}));
}

TEST_CASE("basic classes", "[gring]") {
  CHECK(class_point().gamma == IntPoly{1});
  CHECK(class_T().gamma == IntPoly({0, 1}));
  CHECK(class_Pn(1).gamma == IntPoly({2, 1}));
  CHECK(class_An(3).gamma == IntPoly({1, 3, 3, 1}));
  // P^n is A^n plus P^(n-1); P^1 is T plus two points.
  CHECK(class_Pn(3) == class_An(3) + class_Pn(2));
  CHECK(class_Pn(1) == class_T() + 2 * class_point());
  CHECK(class_Pn(4).euler_characteristic() == 5);
}

TEST_CASE("Segre products", "[gring]") {
  CHECK(star(class_Pn(1), class_Pn(1)).gamma == IntPoly({4, 4, 2}));
  CHECK(star(class_Pn(1), class_Pn(2)).gamma == IntPoly({6, 9, 8, 3}));
  CHECK(star(class_T(), class_T()).gamma == IntPoly({0, 0, 2}));
  // A^1 x A^1 is the Segre quadric minus two meeting lines.
  CHECK(star(class_An(1), class_An(1)).gamma == IntPoly({1, 2, 2}));
}

TEST_CASE("affine concatenation products", "[gring]") {
  CHECK(dot(class_An(2), class_An(3)) == class_An(5));
  CHECK(dot(class_T(), class_T()).gamma == IntPoly({0, 0, 1}));
  CHECK(dot(class_point(), class_Pn(2)) == class_Pn(2));
}

TEST_CASE("joins and cones", "[gring]") {
  CHECK(join_gamma(class_point(), class_point()) == class_Pn(1));
  CHECK(join_gamma(class_Pn(1), class_Pn(2)) == class_Pn(4));
  CHECK(cone_gamma(class_Pn(2)) == class_Pn(3));
  CHECK(cone_gamma(class_point()) == class_Pn(1));
  // Cone over a smooth plane conic is a quadric cone in P^3.
  CHECK(cone_gamma(GClass(IntPoly{2, 2})).gamma == IntPoly({3, 4, 2}));
}

TEST_CASE("ring axioms for star and dot", "[gring][property]") {
  SplitMix64 rng(Seed{13});
  for (int k = 0; k < 200; ++k) {
    GClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
    REQUIRE(star(a, b) == star(b, a));
    REQUIRE(star(star(a, b), c) == star(a, star(b, c)));
    REQUIRE(star(a, b + c) == star(a, b) + star(a, c));
    REQUIRE(star(a, class_point()) == a);
    REQUIRE(dot(a, b) == dot(b, a));
    REQUIRE(dot(a, b + c) == dot(a, b) + dot(a, c));
    REQUIRE(join_gamma(a, b) == join_gamma(b, a));
    REQUIRE(star(a, b).euler_characteristic() == a.euler_characteristic() * b.euler_characteristic());
  }
}
