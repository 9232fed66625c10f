#include <catch_amalgamated.hpp>

#include <algorithm>

#include "polarcsm/groebner.hpp"
#include "polarcsm/parse.hpp"
#include "polarcsm/random.hpp"

using namespace polarcsm;

namespace {

std::vector<MPoly> polys(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<MPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

Ideal twisted_cubic(const RingPtr& ring) {
  return Ideal(ring, polys(ring, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}));
}

MPoly random_form(SplitMix64& rng, const RingPtr& ring, unsigned degree, int terms) {
  std::vector<MPoly::Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    unsigned left = degree;
    for (int v = 0; v + 1 < ring->n_vars; ++v) {
      unsigned e = static_cast<unsigned>(rng.below(left + 1));
      m.set(v, e);
      left -= e;
    }
    m.set(ring->n_vars - 1, left);
    ts.push_back({random_coeff(rng, ring->field), m});
  }
  return MPoly::from_terms(ring, std::move(ts));
}

}  // namespace

TEST_CASE("twisted cubic reduced basis", "[groebner]") {
  auto ring = make_ring(4);
  Ideal I = twisted_cubic(ring);
  GBasis gb = buchberger(I);
  // Independently computed (degrevlex, x0 > x1 > x2 > x3).
  auto expected = polys(ring, {"x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"});
  REQUIRE(gb.elements().size() == 3);
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& g : gb.elements()) found = found || g == e;
    CHECK(found);
  }
  CHECK(verify_groebner(gb, I));
  CHECK(krull_dimension(I) == 2);
  CHECK(contains(gb, parse_poly("x1*x3^2 - x2^2*x3", ring)));
  CHECK(contains(gb, parse_poly("x1^3 - x0^2*x3", ring)));
  CHECK_FALSE(contains(gb, parse_poly("x0*x3", ring)));
}

TEST_CASE("normal form of ideal members is zero", "[groebner][property]") {
  auto ring = make_ring(4);
  Ideal I = twisted_cubic(ring);
  GBasis gb = buchberger(I);
  SplitMix64 rng(Seed{21});
  for (int k = 0; k < 30; ++k) {
    MPoly f = MPoly(ring);
    for (const auto& g : I.generators()) f += random_form(rng, ring, 2, 3) * g;
    REQUIRE(normal_form(f, gb).is_zero());
    // Normal forms are unique representatives of residue classes.
    MPoly h = random_form(rng, ring, 4, 5);
    REQUIRE(normal_form(h + f, gb) == normal_form(h, gb));
  }
}

TEST_CASE("random ideals yield certified bases", "[groebner][property]") {
  auto ring = make_ring(4);
  SplitMix64 rng(Seed{77});
  for (int k = 0; k < 12; ++k) {
    std::vector<MPoly> gens;
    int count = 2 + static_cast<int>(rng.below(3));
    for (int j = 0; j < count; ++j) gens.push_back(random_form(rng, ring, 2 + static_cast<unsigned>(rng.below(2)), 4));
    Ideal I(ring, gens);
    GBasis gb = buchberger(I);
    REQUIRE(verify_groebner(gb, I));
    for (const auto& g : gb.elements()) REQUIRE(g.leading().coeff == 1);
    // Reduced bases are canonical, so permuting generators changes nothing.
    std::reverse(gens.begin(), gens.end());
    GBasis again = buchberger(Ideal(ring, gens));
    REQUIRE(again.elements() == gb.elements());
  }
}

TEST_CASE("unit and zero ideals", "[groebner]") {
  auto ring = make_ring(3);
  GBasis unit = buchberger(Ideal(ring, polys(ring, {"x0", "x0 - 1"})));
  CHECK(unit.is_unit());
  CHECK(krull_dimension(unit) == -1);
  GBasis zero = buchberger(Ideal(ring, {MPoly(ring)}));
  CHECK(zero.is_zero());
  CHECK(krull_dimension(zero) == 3);
  CHECK(normal_form(parse_poly("x1 + 3", ring), zero) == parse_poly("x1 + 3", ring));
}

TEST_CASE("krull dimension examples", "[groebner]") {
  auto ring = make_ring(3);
  CHECK(krull_dimension(Ideal(ring, polys(ring, {"x0*x1"}))) == 2);
  CHECK(krull_dimension(Ideal(ring, polys(ring, {"x0*x1", "x0*x2"}))) == 2);
  CHECK(krull_dimension(Ideal(ring, polys(ring, {"x0", "x1", "x2"}))) == 0);
  CHECK(krull_dimension(Ideal(ring, polys(ring, {"x0^2 - 1", "x1 - x0", "x2"}))) == 0);
}

TEST_CASE("resource limit is enforced", "[groebner]") {
  auto ring = make_ring(4);
  SplitMix64 rng(Seed{5});
  std::vector<MPoly> gens;
  for (int j = 0; j < 4; ++j) gens.push_back(random_form(rng, ring, 3, 8));
  CHECK_THROWS_AS(buchberger(Ideal(ring, gens), MonomialOrder::degrevlex(), GroebnerLimits{3}),
                  ResourceLimitExceeded);
}

TEST_CASE("elimination", "[groebner]") {
  auto ring = make_ring(3);
  // x0 = x2^2, x1 = x2^3 eliminates to the cusp x1^2 - x0^3.
  Ideal I(ring, polys(ring, {"x0 - x2^2", "x1 - x2^3"}));
  Ideal E = eliminate(I, {2});
  for (const auto& g : E.generators()) CHECK((g.support() & 0b100) == 0);
  CHECK(same_ideal(E, Ideal(ring, polys(ring, {"x1^2 - x0^3"}))));
}

TEST_CASE("intersection", "[groebner]") {
  auto ring = make_ring(2);
  Ideal a(ring, polys(ring, {"x0"}));
  Ideal b(ring, polys(ring, {"x1"}));
  CHECK(same_ideal(intersect(a, b), Ideal(ring, polys(ring, {"x0*x1"}))));
  Ideal c(ring, polys(ring, {"x0^2", "x1"}));
  Ideal d(ring, polys(ring, {"x0", "x1^2"}));
  CHECK(same_ideal(intersect(c, d), Ideal(ring, polys(ring, {"x0^2", "x0*x1", "x1^2"}))));
}

TEST_CASE("saturation", "[groebner]") {
  auto ring = make_ring(2);
  Ideal J(ring, polys(ring, {"x0^2*x1"}));
  CHECK(same_ideal(saturate_by_poly(J, parse_poly("x0", ring)), Ideal(ring, polys(ring, {"x1"}))));
  CHECK(same_ideal(saturate_by_poly(J, parse_poly("x0*x1", ring)), Ideal::unit(ring)));

  // (x0 x1) is already saturated with respect to the maximal ideal.
  Ideal K(ring, polys(ring, {"x0*x1"}));
  Ideal m(ring, polys(ring, {"x0", "x1"}));
  CHECK(same_ideal(saturate_by_ideal(K, m), K));

  // The embedded point of (x0^2, x0 x1) at the origin is removed.
  Ideal E(ring, polys(ring, {"x0^2", "x0*x1"}));
  CHECK(same_ideal(saturate_by_ideal(E, m), Ideal(ring, polys(ring, {"x0"}))));
}

TEST_CASE("saturation is idempotent", "[groebner][property]") {
  auto ring = make_ring(3);
  SplitMix64 rng(Seed{31});
  Ideal by(ring, polys(ring, {"x0", "x1"}));
  for (int k = 0; k < 6; ++k) {
    std::vector<MPoly> gens;
    for (int j = 0; j < 2; ++j) gens.push_back(random_form(rng, ring, 2, 3) * parse_poly("x0", ring));
    Ideal J(ring, gens);
    Ideal S = saturate_by_ideal(J, by);
    REQUIRE(same_ideal(saturate_by_ideal(S, by), S));
    for (const auto& g : J.generators()) REQUIRE(contains(S, g));
  }
}

TEST_CASE("projective degree of zero-dimensional schemes", "[groebner]") {
  auto ring = make_ring(3);
  SplitMix64 rng(Seed{8});
  // Two general conics meet in four points.
  Ideal conics(ring, polys(ring, {"x0^2 + x1^2 - x2^2", "x0*x1 - 2*x2^2"}));
  CHECK(degree_zero_dim_projective(conics, rng) == 4);
  // A double point counts with multiplicity.
  Ideal doubled(ring, polys(ring, {"x0^2", "x1"}));
  CHECK(degree_zero_dim_projective(doubled, rng) == 2);
  // The irrelevant ideal is empty as a projective scheme.
  Ideal irrelevant(ring, polys(ring, {"x0", "x1", "x2"}));
  CHECK(degree_zero_dim_projective(irrelevant, rng) == 0);
  // A line is not zero-dimensional.
  Ideal line(ring, polys(ring, {"x0 - x1"}));
  CHECK_THROWS_AS(degree_zero_dim_projective(line, rng), DimensionError);
}

TEST_CASE("ideals reject generators from different rings", "[groebner]") {
  auto r3 = make_ring(3);
  auto r4 = make_ring(4);
  CHECK_THROWS_AS(Ideal(r3, {parse_poly("x0", r3), parse_poly("x0", r4)}), RingMismatch);
}
