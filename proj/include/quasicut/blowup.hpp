#pragma once

#include "quasicut/cutting.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quasicut {

/** Blow-up data: slice off the corner at the given vertex along Y at level eps. */
struct BlowupSpec {
  std::size_t vertex = 0;
  FieldVec y;
  FieldElement epsilon;
};

struct AdmissibilityReport {
  bool admissible = false;
  std::optional<MembershipWitness> witness;  // Y over the quasilattice generators
  FieldVec pairings;                         // <alpha_j, Y> for the chart duals at the vertex
  std::vector<std::string> reasons;
};

namespace detail {

inline FieldVec embed_direction(const DelzantModel& m, const FieldVec& y) {
  const Tower& t = m.presentation.tower;
  if (y.size() != m.n) throw CutError("direction arity does not match the model");
  FieldVec ye;
  for (const auto& c : y) {
    if (!c.tower().is_prefix_of(t))
      throw TowerError("direction uses field radicands unknown to the model");
    ye.push_back(c.embed(t));
  }
  return ye;
}

inline double rough_value(const FieldElement& e) {
  DyadicInterval iv = e.approximate(53);
  return static_cast<double>(iv.midpoint());
}

}  // namespace detail

/**
 * A direction is admissible at a vertex when it belongs to the quasilattice
 * and pairs positively with every chart dual there, that is, it points into
 * the interior of the cone spanned by the active facet normals.
 */
inline AdmissibilityReport admissible(const DelzantModel& m, std::size_t vertex,
                                      const FieldVec& y) {
  if (vertex >= m.presentation.analysis.vertices.size())
    throw GeometryError("vertex index out of range");
  FieldVec ye = detail::embed_direction(m, y);
  AdmissibilityReport rep;
  VertexChart chart = vertex_chart(m, vertex);
  bool positive = true;
  for (std::size_t j = 0; j < chart.alpha.size(); ++j) {
    FieldElement p = dot(chart.alpha[j], ye);
    if (p.sign() <= 0) {
      positive = false;
      rep.reasons.push_back("pairing with the dual of facet " +
                            std::to_string(chart.order[j]) + " is not positive");
    }
    rep.pairings.push_back(std::move(p));
  }
  rep.witness = contains(m.presentation.quasilattice, ye);
  if (!rep.witness)
    rep.reasons.push_back("direction does not belong to the quasilattice");
  rep.admissible = positive && rep.witness.has_value();
  return rep;
}

/** One certified probe of the sliced-off corner at a particular level. */
struct EpsilonTest {
  FieldElement epsilon;
  PolyhedronStatus status = PolyhedronStatus::ok;
  bool simplex_type = false;
  std::size_t facet_count = 0, vertex_count = 0;
};

struct MaxEpsilonResult {
  bool finite = false;
  FieldElement value;  // the supremum, meaningful when finite
  std::vector<FieldElement> candidates;  // vertex levels above the blow-up vertex
  std::vector<EpsilonTest> tests;        // certification trail in probe order
};

namespace detail {

inline EpsilonTest probe_corner(const PolyhedronAnalysis& delta, const FieldVec& y,
                                const FieldElement& eps) {
  EpsilonTest t;
  t.epsilon = eps;
  HPolyhedron q = delta.polyhedron;
  q.facets.push_back(Facet{vec_neg(y), -eps});
  Examination ex = examine(q);
  t.status = ex.status;
  if (ex.status != PolyhedronStatus::ok) return t;
  CombinatorialType ct = combinatorial_type(*ex.analysis);
  t.simplex_type = ct.simplex_type;
  t.facet_count = ct.facet_count;
  t.vertex_count = ct.vertex_count;
  return t;
}

}  // namespace detail

/**
 * The supremum of the levels eps for which the corner piece cut away at the
 * vertex keeps the combinatorial type of a simplex. The combinatorial type is
 * constant strictly between consecutive vertex levels, so probing one interior
 * point per gap, every candidate level, and one point past the last candidate
 * certifies the answer; no monotonicity is assumed.
 */
inline MaxEpsilonResult max_epsilon(const DelzantModel& m, std::size_t vertex,
                                    const FieldVec& y) {
  AdmissibilityReport adm = admissible(m, vertex, y);
  if (!adm.admissible) {
    std::string msg = "direction is not admissible at the vertex:";
    for (const auto& r : adm.reasons) msg += " " + r + ";";
    throw CutError(msg);
  }
  const Tower& t = m.presentation.tower;
  FieldVec ye = detail::embed_direction(m, y);
  const PolyhedronAnalysis& an = m.presentation.analysis;
  FieldElement base = dot(an.vertices[vertex].point, ye);

  MaxEpsilonResult res;
  for (std::size_t w = 0; w < an.vertices.size(); ++w) {
    if (w == vertex) continue;
    FieldElement level = dot(an.vertices[w].point, ye);
    if (compare(level, base) <= 0) continue;
    bool seen = false;
    for (const auto& c : res.candidates)
      if (compare(c, level) == 0) { seen = true; break; }
    if (!seen) res.candidates.push_back(level);
  }
  std::sort(res.candidates.begin(), res.candidates.end(),
            [](const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; });

  FieldElement half = t.rational(Rational(1) / 2);
  FieldElement prev = base;
  bool prev_is_base = true;
  for (const auto& c : res.candidates) {
    res.tests.push_back(detail::probe_corner(an, ye, (prev + c) * half));
    if (!res.tests.back().simplex_type) {
      res.finite = true;
      if (prev_is_base) res.value = base;
      else res.value = prev;
      return res;
    }
    res.tests.push_back(detail::probe_corner(an, ye, c));
    if (!res.tests.back().simplex_type) {
      res.finite = true;
      res.value = c;
      return res;
    }
    prev = c;
    prev_is_base = false;
  }
  res.tests.push_back(detail::probe_corner(an, ye, prev + t.one()));
  if (!res.tests.back().simplex_type) {
    res.finite = true;
    res.value = prev;  // base when there were no candidates: no valid level at all
    return res;
  }
  res.finite = false;
  return res;
}

/**
 * Slice off the corner at the vertex: the plus side of the cut at eps is the
 * blown-up model, the minus side the exceptional simplex-type piece. The
 * corner's type is checked outright; the threshold only enters error reports.
 */
inline CutResult blow_up(const DelzantModel& m, const BlowupSpec& spec) {
  AdmissibilityReport adm = admissible(m, spec.vertex, spec.y);
  if (!adm.admissible) {
    std::string msg = "blow-up direction is not admissible at the vertex:";
    for (const auto& r : adm.reasons) msg += " " + r + ";";
    throw CutError(msg);
  }
  const Tower& t = m.presentation.tower;
  FieldVec ye = detail::embed_direction(m, spec.y);
  FieldElement eps = spec.epsilon;
  if (!eps.tower().is_prefix_of(t))
    throw TowerError("level uses field radicands unknown to the model");
  eps = eps.embed(t);
  const PolyhedronAnalysis& an = m.presentation.analysis;
  FieldElement base = dot(an.vertices[spec.vertex].point, ye);
  if (compare(eps, base) <= 0)
    throw CutError("the blow-up amount must be positive: eps must exceed the vertex level");
  EpsilonTest probe = detail::probe_corner(an, ye, eps);
  if (!probe.simplex_type) {
    MaxEpsilonResult me = max_epsilon(m, spec.vertex, spec.y);
    std::string msg = "the piece cut away at this level is not simplex-type (";
    if (probe.status == PolyhedronStatus::ok)
      msg += std::to_string(probe.facet_count) + " facets, " +
             std::to_string(probe.vertex_count) + " vertices";
    else
      msg += "degenerate";
    msg += "); levels up to ";
    if (me.finite)
      msg += "about " + std::to_string(detail::rough_value(me.value)) + " work";
    else
      msg += "infinity work";
    throw CutError(msg);
  }
  return cut(m, CutSpec{ye, eps, CutSide::ge});
}

/** A scalar generator of the line group together with its chart recombination. */
struct LambdaCheck {
  FieldElement scalar;
  IntVec witness;  // over the chart columns: integral shifts and lattice images
};

/**
 * The local picture of a blow-up: a simple cone with apex at the origin, its
 * chart group Gamma, the dual basis, the two pieces of the cut at eps, and
 * the rotation exponents of both piece groups.
 */
struct LocalModel {
  DelzantPresentation cone;
  GroupPresentation gamma;           // chart lattice over the standard one
  std::vector<FieldVec> gamma_gens;  // torus representatives of the chart lattice generators
  std::vector<FieldVec> alpha;       // rows dual to the cone normals
  FieldVec pairings;                 // <alpha_j, Y>
  CutResult pieces;                  // plus: cone minus the corner; minus: the corner
  ToricGroupData plus_exponents;     // exp(theta <alpha_j,Y>) on the facets, exp(-theta) on the cut
  ToricGroupData minus_exponents;    // same with exp(+theta) on the cut
  std::vector<LambdaCheck> lambda_correspondence;
};

/**
 * Build the local model of a blow-up from a simple cone presentation. The
 * correspondence between the line group of Y and the chart group is verified
 * generator by generator: each scalar gen tau must recombine tau*<alpha,Y>
 * over the chart columns.
 */
inline LocalModel local_model(const DelzantPresentation& cone, const FieldVec& y,
                              const FieldElement& eps) {
  const PolyhedronAnalysis& an = cone.analysis;
  std::size_t n = an.polyhedron.n;
  if (an.vertices.size() != 1 || an.polyhedron.facets.size() != n ||
      an.vertices[0].active.size() != n)
    throw GeometryError("local model requires a simple cone: one vertex, n facets, all active");
  for (const auto& c : an.vertices[0].point)
    if (!c.is_zero()) throw GeometryError("local model requires the cone apex at the origin");

  LocalModel lm;
  lm.cone = cone;
  DelzantModel model = build_model(cone);
  const Tower& t = model.presentation.tower;
  FieldVec ye = detail::embed_direction(model, y);
  FieldElement epse = eps.embed(t);
  if (epse.sign() <= 0) throw CutError("the cut level must be positive for a cone apex at the origin");

  VertexChart chart = vertex_chart(model, 0);
  lm.alpha = chart.alpha;
  for (std::size_t j = 0; j < n; ++j) lm.pairings.push_back(dot(chart.alpha[j], ye));

  // chart group at the apex and the torus representatives of its generators
  IsotropySummary iso = isotropy(model);
  lm.gamma = iso.per_vertex[0];
  std::size_t g = cone.quasilattice.generators.size();
  for (std::size_t k = 0; k < g; ++k) {
    FieldVec col;
    for (std::size_t r = 0; r < n; ++r) col.push_back(chart.C.at(r, n + k));
    lm.gamma_gens.push_back(std::move(col));
  }

  lm.pieces = cut(model, CutSpec{ye, epse, CutSide::ge});

  auto exponents = [&](int cut_sign) {
    ToricGroupData gd;
    gd.m = n + 1;
    gd.tower = t;
    FieldVec cont = lm.pairings;
    cont.push_back(cut_sign > 0 ? t.one() : -t.one());
    gd.continuous.push_back(std::move(cont));
    for (const auto& gg : lm.gamma_gens) {
      FieldVec tr = gg;
      tr.push_back(t.zero());
      gd.translates.push_back(std::move(tr));
    }
    return gd;
  };
  lm.plus_exponents = exponents(-1);
  lm.minus_exponents = exponents(+1);

  // scalar generators of the line group recombine over the chart columns
  LineSubgroup ls = line_subgroup(cone.quasilattice, ye);
  std::vector<FieldVec> chart_cols;
  for (std::size_t c = 0; c < chart.C.cols(); ++c) chart_cols.push_back(chart.C.col(c));
  for (const auto& tau : ls.scalar_gens) {
    FieldVec target;
    for (std::size_t j = 0; j < n; ++j) target.push_back(tau * lm.pairings[j]);
    auto w = z_solve(chart_cols, target);
    if (!w)
      throw LatticeError("internal: a line group generator fails the chart correspondence");
    lm.lambda_correspondence.push_back(LambdaCheck{tau, *std::move(w)});
  }
  return lm;
}

}  // namespace quasicut
