#include <quasicut/field.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace quasicut;
using builders::GoldenField;

TEST_CASE("golden tower basics") {
  GoldenField g;
  REQUIRE(g.t5.depth() == 1);
  REQUIRE(g.tw.depth() == 2);
  REQUIRE(g.phi.coeffs().size() == 2);
  REQUIRE(g.phiw.coeffs().size() == 4);
}

TEST_CASE("addition identities") {
  GoldenField g;
  FieldElement one = g.t5.one();
  CHECK((g.phi + (one - g.phi)) == one);
  FieldElement x = g.t5.element({Rational(3, 7), Rational(-2, 5)});
  CHECK((g.t5.zero() + x) == x);
  // 1/phi + 1 = phi
  CHECK((one / g.phi + one) == g.phi);
}

TEST_CASE("multiplication identities") {
  GoldenField g;
  FieldElement u = g.tw.element({0, 0, 1, 0});
  FieldElement two_plus_phi = Rational(2) * g.tw.one() + g.phiw;
  CHECK((u * u) == two_plus_phi);
  FieldElement x = g.tw.element({Rational(1, 2), Rational(-1, 3), Rational(2), Rational(0)});
  CHECK((x * g.tw.one()) == x);
  // phi * phi = phi + 1
  CHECK((g.phi * g.phi) == (g.phi + g.t5.one()));
  CHECK(oracles::poly_field_check(g.phi, g.phi, '*', g.phi + g.t5.one()));
}

TEST_CASE("inverses") {
  GoldenField g;
  Tower q;
  CHECK(q.rational(2).inverse() == q.rational(Rational(1, 2)));
  CHECK(g.phi.inverse() == (g.phi - g.t5.one()));
  FieldElement u = g.tw.element({0, 0, 1, 0});
  CHECK((u.inverse() * u) == g.tw.one());
  // the stated closed form: 1/u = u/(2+phi)
  FieldElement two_plus_phi = Rational(2) * g.tw.one() + g.phiw;
  CHECK(u.inverse() == (u / two_plus_phi));
  CHECK_THROWS_AS(g.tw.zero().inverse(), FieldError);
}

TEST_CASE("signs") {
  GoldenField g;
  CHECK(g.t5.zero().sign() == 0);
  CHECK((g.phi - g.t5.one()).sign() == 1);
  FieldElement u = g.tw.element({0, 0, 1, 0});
  CHECK((g.tw.one() - u).sign() == -1);
}

TEST_CASE("adjoining square roots") {
  Tower q;
  Tower t5 = q.adjoin_sqrt(q.rational(5), "sqrt5");
  FieldElement phi = t5.element({Rational(1, 2), Rational(1, 2)});
  CHECK((phi * phi) == (phi + t5.one()));
  Tower tw = t5.adjoin_sqrt(Rational(2) * t5.one() + phi, "u");
  REQUIRE(tw.depth() == 2);
  FieldElement r = t5.element({Rational(2), Rational(0)}) + phi;
  FieldElement u = tw.element({0, 0, 1, 0});
  CHECK((u * u) == r.embed(tw));
  CHECK_THROWS_AS(q.adjoin_sqrt(q.rational(-3)), TowerError);
  CHECK_THROWS_AS(q.adjoin_sqrt(q.zero()), TowerError);
}

TEST_CASE("interval approximation") {
  GoldenField g;
  Tower q;
  DyadicInterval one = q.one().approximate(16);
  CHECK(one.lo == 1);
  CHECK(one.hi == 1);

  DyadicInterval ph = g.phi.approximate(40);
  // 1.6180339887 to ten digits
  Rational lo_ref(16180339887LL, 10000000000LL);
  Rational hi_ref(16180339888LL, 10000000000LL);
  CHECK(ph.lo <= hi_ref);
  CHECK(ph.hi >= lo_ref);
  CHECK(ph.width() <= Rational(1, pow2(30)));

  FieldElement s5 = g.t5.element({0, 1});
  DyadicInterval r5 = s5.approximate(10);
  CHECK(r5.lo <= Rational(22361, 10000));
  CHECK(r5.hi >= Rational(22360, 10000));
}

TEST_CASE("interval nesting under precision growth") {
  GoldenField g;
  FieldElement u = g.tw.element({0, 0, 1, 0});
  FieldElement x = g.phiw * u - g.tw.rational(Rational(7, 3));
  DyadicInterval coarse = x.approximate(12);
  DyadicInterval fine = x.approximate(120);
  CHECK(coarse.lo <= fine.lo);
  CHECK(fine.hi <= coarse.hi);
  CHECK(coarse.contains(fine.midpoint()));
}

TEST_CASE("unrelated towers refuse to mix") {
  Tower q;
  Tower t2 = q.adjoin_sqrt(q.rational(2), "sqrt2");
  Tower t3 = q.adjoin_sqrt(q.rational(3), "sqrt3");
  FieldElement a = t2.element({0, 1});
  FieldElement b = t3.element({0, 1});
  CHECK_THROWS_AS(a + b, TowerError);
  CHECK_THROWS_AS(a * b, TowerError);
}

TEST_CASE("prefix embedding is a ring morphism") {
  GoldenField g;
  oracles::Rng rng(2026);
  oracles::OracleConfig cfg;
  for (int i = 0; i < 60; ++i) {
    FieldElement a = g.t5.element({oracles::random_rational(rng, cfg),
                                   oracles::random_rational(rng, cfg)});
    FieldElement b = g.t5.element({oracles::random_rational(rng, cfg),
                                   oracles::random_rational(rng, cfg)});
    CHECK((a + b).embed(g.tw) == (a.embed(g.tw) + b.embed(g.tw)));
    CHECK((a * b).embed(g.tw) == (a.embed(g.tw) * b.embed(g.tw)));
  }
}

TEST_CASE("field axioms on sampled elements") {
  GoldenField g;
  oracles::Rng rng(7);
  oracles::OracleConfig cfg;
  auto sample = [&] {
    return g.tw.element({oracles::random_rational(rng, cfg), oracles::random_rational(rng, cfg),
                         oracles::random_rational(rng, cfg), oracles::random_rational(rng, cfg)});
  };
  for (int i = 0; i < 60; ++i) {
    FieldElement a = sample(), b = sample(), c = sample();
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    if (!a.is_zero()) CHECK((a * a.inverse()) == g.tw.one());
    CHECK((a * a).sign() >= 0);
    CHECK((a * b).sign() == a.sign() * b.sign());
    CHECK(oracles::poly_field_check(a, b, '*', a * b));
    CHECK(oracles::poly_field_check(a, b, '+', a + b));
    CHECK(oracles::poly_field_check(a, b, '-', a - b));
  }
}
