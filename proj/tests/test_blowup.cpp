#include <quasicut/blowup.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support/builders.hpp"

using namespace quasicut;

namespace {

std::size_t vertex_at_origin(const DelzantModel& m) {
  const auto& vs = m.presentation.analysis.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool zero = true;
    for (const auto& c : vs[i].point)
      if (!c.is_zero()) { zero = false; break; }
    if (zero) return i;
  }
  throw std::logic_error("no vertex at the origin");
}

}  // namespace

TEST_CASE("blowing up the quadrant corner") {
  Tower q;
  DelzantModel m = build_model(
      make_presentation(builders::quadrant(q), standard_lattice(2, q)));
  FieldVec diag{q.one(), q.one()};

  AdmissibilityReport adm = admissible(m, 0, diag);
  CHECK(adm.admissible);
  REQUIRE(adm.pairings.size() == 2);
  CHECK(adm.pairings[0] == q.one());
  CHECK(adm.pairings[1] == q.one());
  CHECK(adm.witness.has_value());

  AdmissibilityReport bad = admissible(m, 0, FieldVec{q.one(), -q.one()});
  CHECK_FALSE(bad.admissible);
  CHECK(bad.reasons.size() == 1);

  MaxEpsilonResult me = max_epsilon(m, 0, diag);
  CHECK_FALSE(me.finite);
  CHECK(me.candidates.empty());
  REQUIRE(me.tests.size() == 1);
  CHECK(me.tests[0].simplex_type);

  CutResult bu = blow_up(m, BlowupSpec{0, diag, q.one()});
  CHECK(bu.plus_model.d == 3);
  CHECK_FALSE(bu.plus_model.is_compact);
  // every plus vertex lies on the hyperplane, so the chart falls back to the
  // surviving input facets
  CHECK_FALSE(bu.circle.chart_vertex.has_value());
  CHECK(bu.circle.basis == std::vector<std::size_t>{0, 1});
  CHECK(bu.minus_model.is_compact);
  CHECK(bu.minus_model.d == 3);
  {
    FieldMat expect(q, 1, 4);
    for (std::size_t c = 0; c < 4; ++c) expect.at(0, c) = q.one();
    CHECK(bu.minus_model.level_system == expect);
  }

  // the blow-up is the cut at the same level
  CutResult plain = cut(m, CutSpec{diag, q.one(), CutSide::ge});
  CHECK(plain.plus_facet_origin == bu.plus_facet_origin);
  CHECK(plain.minus_facet_origin == bu.minus_facet_origin);
  CHECK(plain.plus_model.level_system == bu.plus_model.level_system);
  CHECK(plain.minus_model.level_system == bu.minus_model.level_system);
  CHECK(toric_groups_equal(plain.plus_group, bu.plus_group));
  CHECK(toric_groups_equal(plain.minus_group, bu.minus_group));
}

TEST_CASE("square blow-up threshold") {
  Tower q;
  DelzantModel m = build_model(
      make_presentation(builders::unit_square(q), standard_lattice(2, q)));
  FieldVec diag{q.one(), q.one()};
  std::size_t v0 = vertex_at_origin(m);

  MaxEpsilonResult me = max_epsilon(m, v0, diag);
  CHECK(me.finite);
  REQUIRE(me.candidates.size() == 2);
  CHECK(me.candidates[0] == q.one());
  CHECK(me.candidates[1] == q.rational(2));
  CHECK(me.value == q.one());
  // probes: the gap midpoint 1/2, the candidate 1, then 3/2 where the corner
  // picks up two extra facets
  REQUIRE(me.tests.size() == 3);
  CHECK(me.tests[0].simplex_type);
  CHECK(me.tests[1].simplex_type);
  CHECK_FALSE(me.tests[2].simplex_type);
  CHECK(me.tests[2].facet_count == 5);

  CutResult half = blow_up(m, BlowupSpec{v0, diag, q.rational(Rational(1, 2))});
  CHECK(half.plus_model.d == 5);
  CHECK(half.minus_model.d == 3);

  // beyond the threshold the sliced piece is no longer simplex-type
  try {
    blow_up(m, BlowupSpec{v0, diag, q.rational(Rational(3, 2))});
    FAIL("over-threshold blow-up accepted");
  } catch (const CutError& e) {
    std::string msg = e.what();
    CHECK(msg.find("not simplex-type") != std::string::npos);
    CHECK(msg.find("levels up to") != std::string::npos);
  }

  // exactly at the threshold both halves are triangles
  CutResult at = blow_up(m, BlowupSpec{v0, diag, q.one()});
  CHECK(at.plus_model.d == 3);
  CHECK(at.minus_model.d == 3);

  // the level must exceed the vertex level
  CHECK_THROWS_AS(blow_up(m, BlowupSpec{v0, diag, q.zero()}), CutError);
  CHECK_THROWS_AS(blow_up(m, BlowupSpec{v0, diag, -q.one()}), CutError);
  // out-of-range vertex
  CHECK_THROWS_AS(admissible(m, 9, diag), GeometryError);
}

TEST_CASE("kite apex admissibility and threshold") {
  builders::GoldenField g;
  DelzantModel m = build_model(
      make_presentation(analyze(builders::kite_polyhedron(g)), builders::pentagon_lattice(g)));
  const Tower& t = m.presentation.tower;
  FieldElement phi = g.phiw.embed(t);
  std::size_t apex = vertex_at_origin(m);

  // the axis direction leaves the cone at the apex
  AdmissibilityReport off = admissible(m, apex, FieldVec{t.one(), t.zero()});
  CHECK_FALSE(off.admissible);
  REQUIRE(off.pairings.size() == 2);
  CHECK(off.pairings[0] == t.one() - phi);
  CHECK(off.pairings[1] == phi - t.one());

  // straight up: Y = (0, u)
  FieldVec up{t.zero(), g.fe(0, 0, 1, 0).embed(t)};
  AdmissibilityReport in = admissible(m, apex, up);
  CHECK(in.admissible);
  CHECK(in.pairings[0] == phi);
  CHECK(in.pairings[1] == phi);

  MaxEpsilonResult me = max_epsilon(m, apex, up);
  CHECK(me.finite);
  CHECK(me.value == phi);
  REQUIRE(me.candidates.size() == 2);
  CHECK(me.candidates[0] == phi);
  CHECK(me.candidates[1] == Rational(2) * t.one());

  CutResult bu = blow_up(m, BlowupSpec{apex, up, t.one()});
  CHECK(bu.minus_model.d == 3);
  CHECK(bu.plus_model.d == 5);
}

TEST_CASE("local model of a half-integral cone") {
  Tower q;
  FieldVec e1{q.one(), q.zero()};
  HPolyhedron cone;
  cone.n = 2;
  cone.tower = q;
  cone.facets = {{e1, q.zero()}, {FieldVec{q.one(), q.rational(2)}, q.zero()}};
  DelzantPresentation cp = make_presentation(cone, standard_lattice(2, q));
  LocalModel lm = local_model(cp, FieldVec{q.one(), q.one()}, q.one());

  CHECK(lm.gamma.free_rank == 0);
  CHECK(lm.gamma.torsion == std::vector<Integer>{2});
  FieldElement half = q.rational(Rational(1, 2));
  REQUIRE(lm.pairings.size() == 2);
  CHECK(lm.pairings[0] == half);
  CHECK(lm.pairings[1] == half);

  // the dual rows invert the normals exactly
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      FieldElement v = dot(lm.alpha[i], cp.analysis.polyhedron.facets[j].normal);
      CHECK(v == (i == j ? q.one() : q.zero()));
    }

  REQUIRE(lm.lambda_correspondence.size() == 1);
  CHECK(lm.lambda_correspondence[0].scalar == q.one());
  CHECK(toric_groups_equal(lm.pieces.plus_group, lm.plus_exponents));
  CHECK(toric_groups_equal(lm.pieces.minus_group, lm.minus_exponents));
}

TEST_CASE("local model over the extended lattice") {
  builders::GoldenField g;
  const Tower& t5 = g.t5;
  Quasilattice qe = make_quasilattice(
      2, {FieldVec{t5.one(), t5.zero()}, FieldVec{t5.zero(), t5.one()},
          FieldVec{t5.one(), g.phi}});
  DelzantPresentation cp = make_presentation(builders::quadrant(t5), qe);
  LocalModel lm = local_model(cp, FieldVec{t5.one(), t5.one()}, t5.one());

  CHECK(lm.gamma.free_rank == 1);
  CHECK(lm.gamma.torsion.empty());
  CHECK(lm.lambda_correspondence.size() == 1);
  CHECK(toric_groups_equal(lm.pieces.plus_group, lm.plus_exponents));
  CHECK(toric_groups_equal(lm.pieces.minus_group, lm.minus_exponents));
}

TEST_CASE("local model rotation exponents along an irrational direction") {
  builders::GoldenField g;
  const Tower& t5 = g.t5;
  Quasilattice qe = make_quasilattice(
      2, {FieldVec{t5.one(), t5.zero()}, FieldVec{t5.zero(), t5.one()},
          FieldVec{t5.one(), g.phi}});
  DelzantPresentation cp = make_presentation(builders::quadrant(t5), qe);
  LocalModel lm = local_model(cp, FieldVec{t5.one(), g.phi}, t5.one());

  // duals of e1, e2 pair with (1, phi) to give exactly those coordinates
  REQUIRE(lm.pairings.size() == 2);
  CHECK(lm.pairings[0] == t5.one());
  CHECK(lm.pairings[1] == g.phi);
  REQUIRE(lm.plus_exponents.continuous.size() == 1);
  REQUIRE(lm.minus_exponents.continuous.size() == 1);
  const FieldVec& pc = lm.plus_exponents.continuous[0];
  const FieldVec& mc = lm.minus_exponents.continuous[0];
  REQUIRE(pc.size() == 3);
  CHECK(pc[0] == t5.one());
  CHECK(pc[1] == g.phi);
  CHECK(pc[2] == -t5.one());
  CHECK(mc[0] == t5.one());
  CHECK(mc[1] == g.phi);
  CHECK(mc[2] == t5.one());
}

TEST_CASE("local model at the kite apex") {
  builders::GoldenField g;
  DelzantModel m = build_model(
      make_presentation(analyze(builders::kite_polyhedron(g)), builders::pentagon_lattice(g)));
  std::size_t apex = vertex_at_origin(m);
  HPolyhedron cone = vertex_cone(m.presentation.analysis, apex);
  DelzantPresentation cp = make_presentation(analyze(cone), builders::pentagon_lattice(g));
  const Tower& t = cp.tower;
  FieldVec up{t.zero(), g.fe(0, 0, 1, 0).embed(t)};
  LocalModel lm = local_model(cp, up, t.one());

  // the line group along (0, u) is dense, so several scalar generators are
  // checked against the chart columns
  CHECK(lm.lambda_correspondence.size() >= 2);
  CHECK(toric_groups_equal(lm.pieces.plus_group, lm.plus_exponents));
  CHECK(toric_groups_equal(lm.pieces.minus_group, lm.minus_exponents));
}

TEST_CASE("local model input checks") {
  Tower q;
  // not a cone: the square has four vertices
  DelzantPresentation sq =
      make_presentation(builders::unit_square(q), standard_lattice(2, q));
  CHECK_THROWS_AS(local_model(sq, FieldVec{q.one(), q.one()}, q.one()), GeometryError);

  // cone apex away from the origin
  HPolyhedron off;
  off.n = 2;
  off.tower = q;
  off.facets = {{FieldVec{q.one(), q.zero()}, q.one()},
                {FieldVec{q.zero(), q.one()}, q.zero()}};
  DelzantPresentation op = make_presentation(off, standard_lattice(2, q));
  CHECK_THROWS_AS(local_model(op, FieldVec{q.one(), q.one()}, q.one()), GeometryError);

  // nonpositive level
  DelzantPresentation cp =
      make_presentation(builders::quadrant(q), standard_lattice(2, q));
  CHECK_THROWS_AS(local_model(cp, FieldVec{q.one(), q.one()}, q.zero()), CutError);
  CHECK_THROWS_AS(local_model(cp, FieldVec{q.one(), q.one()}, -q.one()), CutError);
}
