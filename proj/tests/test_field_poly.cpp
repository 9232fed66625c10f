#include <catch_amalgamated.hpp>

#include "polarcsm/field.hpp"
#include "polarcsm/mpoly.hpp"
#include "polarcsm/parse.hpp"
#include "polarcsm/random.hpp"

using namespace polarcsm;

namespace {

MPoly random_poly(SplitMix64& rng, const RingPtr& ring, int terms, unsigned max_exp) {
  std::vector<MPoly::Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int v = 0; v < ring->n_vars; ++v) m.set(v, static_cast<unsigned>(rng.below(max_exp + 1)));
    ts.push_back({random_coeff(rng, ring->field), m});
  }
  return MPoly::from_terms(ring, std::move(ts));
}

}  // namespace

TEST_CASE("prime field validates its modulus", "[field]") {
  CHECK_NOTHROW(PrimeField());
  CHECK_NOTHROW(PrimeField(1048583));
  CHECK_THROWS_AS(PrimeField(2147483649ULL), std::invalid_argument);  // 3 * 715827883
  CHECK_THROWS_AS(PrimeField(65537), std::invalid_argument);    // prime but too small
  CHECK_THROWS_AS(PrimeField(4294967311ULL), std::invalid_argument);
}

TEST_CASE("field axioms on random triples", "[field][property]") {
  SplitMix64 rng(Seed{7});
  for (std::uint64_t p : {std::uint64_t{kDefaultPrime}, std::uint64_t{1048583}, std::uint64_t{4294967291}}) {
    PrimeField F(p);
    for (int k = 0; k < 2000; ++k) {
      Coeff a = random_coeff(rng, F), b = random_coeff(rng, F), c = random_coeff(rng, F);
      REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      REQUIRE(F.sub(F.add(a, b), b) == a);
      if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
    }
    CHECK(F.from_int(-1) == p - 1);
    CHECK(F.to_signed(static_cast<Coeff>(p - 1)) == -1);
  }
}

TEST_CASE("degrevlex is a monomial order compatible with multiplication", "[order][property]") {
  // Every monomial of degree <= 3 in 4 variables.
  std::vector<Monomial> monos;
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; a + b <= 3; ++b)
      for (unsigned c = 0; a + b + c <= 3; ++c)
        for (unsigned d = 0; a + b + c + d <= 3; ++d) {
          Monomial m;
          m.set(0, a);
          m.set(1, b);
          m.set(2, c);
          m.set(3, d);
          monos.push_back(m);
        }
  REQUIRE(monos.size() == 35);
  for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::elimination(0b1000)}) {
    for (const auto& m1 : monos) {
      for (const auto& m2 : monos) {
        int c = order.compare(m1, m2);
        REQUIRE(c == -order.compare(m2, m1));
        REQUIRE((c == 0) == (m1 == m2));
        if (c <= 0) continue;
        for (const auto& m : monos) REQUIRE(order.greater(m * m1, m * m2));
      }
    }
  }
  // x1^2 > x0*x2 and x1*x2 > x0*x3 with x0 > x1 > x2 > x3.
  auto ring = make_ring(4);
  CHECK(parse_poly("x0*x2 - x1^2", ring).leading().mono == parse_poly("x1^2", ring).leading().mono);
  CHECK(parse_poly("x0*x3 - x1*x2", ring).leading().mono == parse_poly("x1*x2", ring).leading().mono);
}

TEST_CASE("elimination order puts the eliminated block first", "[order]") {
  auto order = MonomialOrder::elimination(0b0001);
  Monomial with_x0 = Monomial::variable(0);
  Monomial big = Monomial::variable(1, 7) * Monomial::variable(3, 4);
  CHECK(order.greater(with_x0, big));
}

TEST_CASE("parse_poly examples", "[parse]") {
  auto ring = make_ring(4);
  const auto& F = ring->field;

  MPoly q = parse_poly("x0*x3-x1*x2", ring);
  REQUIRE(q.size() == 2);
  CHECK(F.to_signed(q.terms()[0].coeff) == -1);  // x1*x2 leads
  CHECK(F.to_signed(q.terms()[1].coeff) == 1);

  CHECK(parse_poly("0", ring).is_zero());
  CHECK(parse_poly("x1^2 - x1*x1", ring).is_zero());
  CHECK(parse_poly(" ( x0 + x1 ) * ( x0 - x1 ) ", ring) == parse_poly("x0^2 - x1^2", ring));
  CHECK(parse_poly("-x0^2", ring) == -parse_poly("x0^2", ring));
  CHECK(parse_poly("2^3*x0", ring) == parse_poly("8*x0", ring));
  CHECK(parse_poly("-(x0 - 2*x3)", ring) == parse_poly("2*x3 - x0", ring));
}

TEST_CASE("parse_poly errors carry positions", "[parse]") {
  auto ring = make_ring(4);
  try {
    parse_poly("x0 + x4", ring);
    FAIL("expected unknown variable");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_poly("y + x0", ring), ParseError);
  CHECK_THROWS_AS(parse_poly("x0 x1", ring), ParseError);  // '*' is mandatory
  CHECK_THROWS_AS(parse_poly("x0 +", ring), ParseError);
  CHECK_THROWS_AS(parse_poly("(x0", ring), ParseError);
  CHECK_THROWS_AS(parse_poly("", ring), ParseError);
  CHECK_THROWS_AS(parse_poly("x0^70000", ring), ParseError);
  CHECK_THROWS_AS(parse_poly("x0^40000*x0^40000", ring), ParseError);
  CHECK_THROWS_AS(parse_integer_poly("99999999999*99999999999", 2), ParseError);
}

TEST_CASE("print/parse round trip on canonical forms", "[parse][property]") {
  auto ring = make_ring(5);
  SplitMix64 rng(Seed{11});
  for (int k = 0; k < 200; ++k) {
    MPoly f = random_poly(rng, ring, 1 + static_cast<int>(rng.below(8)), 4);
    REQUIRE(parse_poly(f.to_string(), ring) == f);
    // Canonicalizing a canonical term list is the identity.
    REQUIRE(MPoly::from_terms(ring, f.terms()) == f);
  }
}

TEST_CASE("arithmetic identities", "[mpoly]") {
  auto ring = make_ring(3);
  MPoly f = parse_poly("3*x0^2*x1 - x2 + 7", ring);
  CHECK((f + (-f)).is_zero());
  CHECK((parse_poly("x0 + x1", ring) * parse_poly("x0 - x1", ring)) == parse_poly("x0^2 - x1^2", ring));
  CHECK(f * MPoly::constant(ring, 1) == f);
  CHECK(parse_poly("x0 + x1", ring).pow(3) == parse_poly("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", ring));
  CHECK_THROWS_AS(f + parse_poly("x0", make_ring(4)), RingMismatch);
  CHECK_THROWS_AS(f + parse_poly("x0", make_ring(3, 1048583)), RingMismatch);
}

TEST_CASE("ring axioms on random polynomials", "[mpoly][property]") {
  auto ring = make_ring(3);
  SplitMix64 rng(Seed{3});
  for (int k = 0; k < 50; ++k) {
    MPoly a = random_poly(rng, ring, 5, 3), b = random_poly(rng, ring, 5, 3), c = random_poly(rng, ring, 5, 3);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) - b == a);
  }
}

TEST_CASE("partial derivatives", "[mpoly]") {
  auto ring = make_ring(4);
  CHECK(parse_poly("x0*x2 - x1^2", ring).derivative(1) == parse_poly("-2*x1", ring));
  CHECK(parse_poly("x0*x3 - x1*x2", ring).derivative(0) == parse_poly("x3", ring));
  CHECK(MPoly::constant(ring, 5).derivative(2).is_zero());
  CHECK(parse_poly("x0^3*x1 + x0*x2", ring).derivative(0).homogeneous_degree() == std::nullopt);
  CHECK(parse_poly("x0^3*x1 + x2^4", ring).derivative(2).homogeneous_degree() == 3u);
  CHECK_THROWS_AS(parse_poly("x0", ring).derivative(4), std::out_of_range);
}

TEST_CASE("derivative is linear and satisfies Leibniz", "[mpoly][property]") {
  auto ring = make_ring(3);
  SplitMix64 rng(Seed{5});
  for (int k = 0; k < 50; ++k) {
    MPoly a = random_poly(rng, ring, 4, 3), b = random_poly(rng, ring, 4, 3);
    Coeff c = random_coeff(rng, ring->field);
    for (int v = 0; v < 3; ++v) {
      REQUIRE((a.scaled(c) + b).derivative(v) == a.derivative(v).scaled(c) + b.derivative(v));
      REQUIRE((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
  }
}

TEST_CASE("is_homogeneous", "[mpoly]") {
  auto ring = make_ring(4);
  CHECK(parse_poly("x0*x3 - x1*x2", ring).homogeneous_degree() == 2u);
  CHECK_FALSE(parse_poly("x0^2 + x1", ring).homogeneous_degree().has_value());
  CHECK(parse_poly("0", ring).homogeneous_degree() == 0u);
}

TEST_CASE("random linear forms", "[random]") {
  auto ring = make_ring(4);
  SplitMix64 a(Seed{99}), b(Seed{99});
  MPoly la = random_linear_form(a, ring);
  MPoly lb = random_linear_form(b, ring);
  CHECK(la == lb);
  CHECK(la.homogeneous_degree() == 1u);
  CHECK_FALSE(la.is_zero());

  SplitMix64 root(Seed{1});
  SplitMix64 s1 = root.split(1), s2 = root.split(2);
  CHECK_FALSE(random_linear_form(s1, ring) == random_linear_form(s2, ring));
  // Splitting does not advance the parent.
  SplitMix64 again(Seed{1});
  CHECK(again.next() == root.next());
}
