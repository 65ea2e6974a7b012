// Shared constructions for the test suite: the golden field tower, the
// pentagonal quasilattice, the kite, and a few classical shapes.
#pragma once

#include <quasicut/quasicut.hpp>

namespace builders {

using namespace quasicut;

struct GoldenField {
  Tower rationals;  // depth 0
  Tower t5;         // adjoin sqrt5
  Tower tw;         // adjoin u = sqrt(2 + phi)
  FieldElement phi;   // over t5
  FieldElement phiw;  // phi embedded into tw

  GoldenField() {
    rationals = Tower{};
    t5 = rationals.adjoin_sqrt(rationals.rational(5), "sqrt5");
    phi = t5.element({Rational(1, 2), Rational(1, 2)});
    tw = t5.adjoin_sqrt(Rational(2) * t5.one() + phi, "u");
    phiw = phi.embed(tw);
  }

  FieldElement fe(Rational a, Rational b, Rational c, Rational d) const {
    return tw.element({a, b, c, d});
  }
};

// The five pentagonal directions: Y0 = (1,0) and the images of its rotations
// by multiples of 2*pi/5, written over the golden tower.
inline std::vector<FieldVec> pentagon_generators(const GoldenField& g) {
  FieldElement half_u = g.fe(0, 0, Rational(1, 2), 0);
  FieldElement inv_2phi = g.fe(Rational(-1, 4), Rational(1, 4), 0, 0);
  FieldElement mhalf_phi = g.fe(Rational(-1, 4), Rational(-1, 4), 0, 0);
  FieldElement u_over_2phi = g.fe(0, 0, Rational(-1, 4), Rational(1, 4));
  return {
      FieldVec{g.tw.one(), g.tw.zero()},
      FieldVec{inv_2phi, half_u},
      FieldVec{mhalf_phi, u_over_2phi},
      FieldVec{mhalf_phi, -u_over_2phi},
      FieldVec{inv_2phi, -half_u},
  };
}

inline Quasilattice pentagon_lattice(const GoldenField& g) {
  return make_quasilattice(2, pentagon_generators(g));
}

// Four of the pentagonal directions bound the kite; the offsets put the two
// lower facets through the origin.
inline HPolyhedron kite_polyhedron(const GoldenField& g) {
  auto Y = pentagon_generators(g);
  HPolyhedron p;
  p.n = 2;
  p.tower = g.tw;
  p.facets = {
      {vec_neg(Y[1]), -g.tw.one()},
      {Y[2], g.tw.zero()},
      {vec_neg(Y[3]), g.tw.zero()},
      {Y[4], -g.tw.one()},
  };
  return p;
}

inline FieldVec rv(const Tower& t, Rational a, Rational b) {
  return FieldVec{t.rational(a), t.rational(b)};
}

inline HPolyhedron unit_square(const Tower& t) {
  HPolyhedron p;
  p.n = 2;
  p.tower = t;
  p.facets = {
      {rv(t, 1, 0), t.zero()},
      {rv(t, 0, 1), t.zero()},
      {rv(t, -1, 0), t.rational(-1)},
      {rv(t, 0, -1), t.rational(-1)},
  };
  return p;
}

inline HPolyhedron quadrant(const Tower& t) {
  HPolyhedron p;
  p.n = 2;
  p.tower = t;
  p.facets = {
      {rv(t, 1, 0), t.zero()},
      {rv(t, 0, 1), t.zero()},
  };
  return p;
}

inline HPolyhedron standard_triangle(const Tower& t) {
  HPolyhedron p;
  p.n = 2;
  p.tower = t;
  p.facets = {
      {rv(t, 1, 0), t.zero()},
      {rv(t, 0, 1), t.zero()},
      {rv(t, -1, -1), t.rational(-1)},
  };
  return p;
}

inline bool vec_equals(const FieldVec& a, const FieldVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (compare(a[i], b[i]) != 0) return false;
  return true;
}

}  // namespace builders
