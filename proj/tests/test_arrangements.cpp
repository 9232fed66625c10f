#include <catch_amalgamated.hpp>

#include <optional>

#include "polarcsm/arrangements.hpp"
#include "polarcsm/random.hpp"

using namespace polarcsm;

namespace {

using Forms = std::vector<std::vector<std::int64_t>>;

IntPoly t_minus(std::int64_t a) { return IntPoly{-a, 1}; }

}  // namespace

TEST_CASE("lattice of a pencil plus a line", "[arrangements]") {
  Arrangement arr = Arrangement::from_text(2, {"x0", "x1", "x0 + x1", "x2"});
  IntersectionLattice lat = build_lattice(arr);
  REQUIRE(lat.flats.size() == 10);
  CHECK(lat.flats.front().hyperplanes == 0);
  CHECK(lat.flats.front().moebius == 1);
  CHECK(lat.flats.back().hyperplanes == 0b1111);
  CHECK(lat.flats.back().moebius == -2);
  int triple = 0;
  for (const auto& f : lat.flats) {
    if (f.hyperplanes == 0b0111) {
      ++triple;
      CHECK(f.rank == 2);
      CHECK(f.dim == 1);
      CHECK(f.moebius == 2);
    }
  }
  CHECK(triple == 1);
  IntPoly p = char_poly(lat);
  CHECK(p == IntPoly({-2, 5, -4, 1}));
  CHECK(reduced_char_poly(p) == IntPoly({2, -3, 1}));
  CHECK(chi_from_charpoly(reduced_char_poly(p), 2).poly() == IntPoly({0, 2, 1}));
}

TEST_CASE("classical characteristic polynomials", "[arrangements]") {
  // Coordinate hyperplanes: (t - 1)^3.
  CHECK(char_poly(Arrangement(2, Forms{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == IntPoly({-1, 3, -3, 1}));
  // Four general lines in P^2.
  Arrangement four(2, Forms{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(reduced_char_poly(char_poly(four)) == IntPoly({3, -3, 1}));
  // Braid arrangement x_i - x_j in k^4: t (t - 1)(t - 2)(t - 3).
  Arrangement braid(3, Forms{{1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}, {0, 1, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}});
  CHECK(char_poly(braid) == IntPoly::t() * t_minus(1) * t_minus(2) * t_minus(3));
  // One hyperplane in P^3: the complement is A^3.
  Arrangement one(3, Forms{{0, 2, 0, 0}});
  CHECK(reduced_char_poly(char_poly(one)) == IntPoly({0, 0, 0, 1}));
  CHECK(chi_from_charpoly(IntPoly({0, 0, 0, 1}), 3).poly() == IntPoly({1, -1, 1, -1}));
}

TEST_CASE("chi and characteristic polynomial determine each other", "[arrangements][property]") {
  SplitMix64 rng(Seed{41});
  for (int k = 0; k < 200; ++k) {
    int n = 1 + static_cast<int>(rng.below(5));
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = static_cast<std::int64_t>(rng.below(21)) - 10;
    IntPoly reduced(c);
    ChiPoly chi = chi_from_charpoly(reduced, n);
    REQUIRE(charpoly_from_chi(chi) == reduced);
  }
}

TEST_CASE("random integer arrangements have consistent lattices", "[arrangements][property]") {
  SplitMix64 rng(Seed{43});
  int built = 0;
  for (int k = 0; k < 60; ++k) {
    int n = 2 + static_cast<int>(rng.below(2));
    Forms forms;
    int count = 2 + static_cast<int>(rng.below(5));
    for (int j = 0; j < count; ++j) {
      std::vector<std::int64_t> f(static_cast<std::size_t>(n) + 1);
      for (auto& x : f) x = static_cast<std::int64_t>(rng.below(5)) - 2;
      forms.push_back(f);
    }
    std::optional<Arrangement> arr;
    try {
      arr.emplace(n, forms);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++built;
    IntPoly p = char_poly(*arr);
    REQUIRE(p.degree() == n + 1);
    REQUIRE(p.coeff(static_cast<std::size_t>(n + 1)) == 1);
    REQUIRE(p.coeff(static_cast<std::size_t>(n)) == -static_cast<std::int64_t>(arr->size()));
    REQUIRE(p.eval(1) == 0);
    // Signs of a characteristic polynomial alternate.
    for (int i = 0; i <= n + 1; ++i) {
      std::int64_t c = p.coeff(static_cast<std::size_t>(i));
      REQUIRE((((n + 1 - i) % 2 == 0) ? c >= 0 : c <= 0));
    }
  }
  CHECK(built > 20);
}

TEST_CASE("algebraic route matches the lattice", "[arrangements]") {
  TrialConfig cfg;
  std::vector<Arrangement> cases = {
      Arrangement::from_text(2, {"x0", "x1", "x0 + x1", "x2"}),
      Arrangement::from_text(2, {"x0", "x1", "x2"}),
      Arrangement::from_text(2, {"x0 + x1 + x2", "x0 + 2*x1 + 3*x2", "x0 - x1 + 5*x2"}),
      Arrangement::from_text(3, {"x0", "x1", "x2 - x3"}),
  };
  for (const auto& arr : cases) {
    CHECK(charpoly_algebraic(arr, cfg) == reduced_char_poly(char_poly(arr)));
  }
}

TEST_CASE("arrangement validation", "[arrangements]") {
  CHECK_THROWS_AS(Arrangement(2, Forms{{1, 0, 0}, {2, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement(2, Forms{{0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement(2, Forms{{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement(2, Forms{}), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement::from_text(2, {"x0*x1"}), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement::from_text(2, {"x0 + 1"}), std::invalid_argument);
  CHECK_THROWS_AS(reduced_char_poly(IntPoly{1, 1}), InexactDivision);
}

TEST_CASE("defining polynomial", "[arrangements]") {
  Arrangement arr(1, Forms{{1, 0}, {1, -1}});
  auto ring = make_ring(2);
  CHECK(arr.defining_polynomial(ring).to_string() == "x0^2 - x0*x1");
}
