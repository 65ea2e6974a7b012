#pragma once

#include "quasicut/delzant.hpp"
#include "quasicut/toric_group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quasicut {

/** Cutting data: the hyperplane H(Y, eps) = {mu : <mu, Y> = eps}. */
struct CutSpec {
  FieldVec y;
  FieldElement epsilon;
  CutSide side = CutSide::ge;  // which half counts as the plus side
};

struct CutSideReport {
  bool ok = false;
  PolyhedronStatus status = PolyhedronStatus::ok;
  std::size_t dimension = 0;
  bool simple = false;
  bool pointed = false;
  std::optional<PolyhedronAnalysis> analysis;  // present when status == ok
  std::vector<std::string> reasons;            // failure descriptions
};

struct CutValidation {
  CutSideReport plus, minus;
  std::vector<std::size_t> vertices_on_hyperplane;  // indices into the input vertex list

  bool ok() const { return plus.ok && minus.ok; }
};

/** Circle data attached to a cut: the scalar group of Y plus chart coefficients. */
struct CircleActionData {
  LineSubgroup line;
  std::optional<std::size_t> chart_vertex;  // plus-side vertex off the hyperplane, if any
  std::vector<std::size_t> basis;           // plus-side facet indices forming the chart basis
  FieldVec b;                               // Y = sum_j b_j X_{basis_j}
  std::vector<std::size_t> d1_order;        // chart order of the plus-side facets
  FieldVec d1_exponents;                    // rotation exponents, aligned with d1_order
};

/** The boundary piece shared by the two halves: Delta intersected with H(Y, eps). */
struct ReducedSpace {
  FieldVec origin;                 // a point of the hyperplane
  std::vector<FieldVec> frame;     // basis of the hyperplane's direction space
  PolyhedronStatus slice_status = PolyhedronStatus::ok;
  std::optional<PolyhedronAnalysis> slice;  // in frame coordinates, when full-dimensional there
  std::vector<FieldVec> slice_vertices;     // ambient coordinates
  std::vector<std::size_t> fixed_vertices;  // input vertices lying on the hyperplane
};

struct CutResult {
  CutSpec spec;  // normalized: side == ge, so plus = {<mu,Y> >= eps}
  CutValidation validation;
  CircleActionData circle;
  DelzantModel plus_model, minus_model;
  // side facet index -> input facet index; the cut facet maps to d (one past the input facets)
  std::vector<std::size_t> plus_facet_origin, minus_facet_origin;
  FieldMat a_plus;  // non-basis plus facets over the chart basis; the cut facet gives the last column
  ToricGroupData plus_group, minus_group;
  ReducedSpace reduced;
};

namespace detail {

inline CutSpec normalize_spec(CutSpec spec) {
  if (spec.side == CutSide::le) {
    spec.y = vec_neg(spec.y);
    spec.epsilon = -spec.epsilon;
    spec.side = CutSide::ge;
  }
  bool zero = true;
  for (const auto& c : spec.y)
    if (!c.is_zero()) { zero = false; break; }
  if (zero) throw CutError("cut direction must be nonzero");
  return spec;
}

inline CutSideReport examine_side(const HPolyhedron& delta, const FieldVec& y,
                                  const FieldElement& eps, CutSide side, const char* label) {
  HPolyhedron q = delta;
  if (side == CutSide::ge)
    q.facets.push_back(Facet{y, eps});
  else
    q.facets.push_back(Facet{vec_neg(y), -eps});
  CutSideReport rep;
  Examination ex = examine(q);
  rep.status = ex.status;
  rep.dimension = ex.dimension;
  switch (ex.status) {
    case PolyhedronStatus::empty:
      rep.reasons.push_back(std::string(label) + " half is empty");
      return rep;
    case PolyhedronStatus::low_dimension:
      rep.reasons.push_back(std::string(label) + " half has dimension " +
                            std::to_string(ex.dimension) + " < " + std::to_string(delta.n));
      return rep;
    case PolyhedronStatus::ok:
      break;
  }
  rep.analysis = std::move(ex.analysis);
  rep.simple = rep.analysis->simple;
  rep.pointed = rep.analysis->pointed;
  if (!rep.pointed) rep.reasons.push_back(std::string(label) + " half is not pointed");
  if (!rep.simple) rep.reasons.push_back(std::string(label) + " half is not simple");
  rep.ok = rep.pointed && rep.simple;
  return rep;
}

}  // namespace detail

/**
 * Check that both halves of the cut are n-dimensional simple pointed
 * polyhedra. Failures are reported, not thrown.
 */
inline CutValidation validate_cut(const PolyhedronAnalysis& delta, const CutSpec& raw) {
  CutSpec spec = detail::normalize_spec(raw);
  CutValidation val;
  val.plus = detail::examine_side(delta.polyhedron, spec.y, spec.epsilon, CutSide::ge, "plus");
  val.minus = detail::examine_side(delta.polyhedron, spec.y, spec.epsilon, CutSide::le, "minus");
  for (std::size_t i = 0; i < delta.vertices.size(); ++i)
    if (compare(dot(delta.vertices[i].point, spec.y), spec.epsilon) == 0)
      val.vertices_on_hyperplane.push_back(i);
  return val;
}

namespace detail {

// Chart basis on one side: the active facets of the first vertex off the
// hyperplane; when every vertex lies on it (cone-like cuts), the
// lexicographically first independent n-subset of the surviving input facets.
inline std::pair<std::optional<std::size_t>, std::vector<std::size_t>> side_chart_basis(
    const PolyhedronAnalysis& an, const FieldVec& y, const FieldElement& eps,
    const std::vector<std::size_t>& facet_origin, std::size_t input_facet_count) {
  for (std::size_t vi = 0; vi < an.vertices.size(); ++vi)
    if (compare(dot(an.vertices[vi].point, y), eps) != 0)
      return {vi, an.vertices[vi].active};
  std::size_t n = an.polyhedron.n;
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < an.polyhedron.facets.size(); ++j)
    if (facet_origin[j] < input_facet_count) candidates.push_back(j);
  if (candidates.size() >= n) {
    std::vector<std::size_t> sel(n);
    for (std::size_t i = 0; i < n; ++i) sel[i] = i;
    do {
      FieldMat m(an.polyhedron.tower, n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
          m.at(r, c) = an.polyhedron.facets[candidates[sel[c]]].normal[r];
      if (inverse(m)) {
        std::vector<std::size_t> basis;
        for (auto s : sel) basis.push_back(candidates[s]);
        return {std::nullopt, basis};
      }
    } while (next_combination(sel, candidates.size()));
  }
  throw CutError("no chart vertex off the cutting hyperplane and no independent surviving basis");
}

// The symmetry group of a cut model inside its facet torus: connected part
// spanned by the projection kernel, translate part from the quasilattice
// generators expressed over the chart basis.
inline ToricGroupData side_group(const DelzantModel& model, const std::vector<std::size_t>& basis) {
  const Tower& t = model.presentation.tower;
  std::size_t n = model.n, d = model.d;
  ToricGroupData g;
  g.m = d;
  g.tower = t;
  FieldMat b(t, n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) b.at(r, c) = model.pi.at(r, basis[c]);
  auto binv = inverse(b);
  if (!binv) throw CutError("chart basis normals are dependent");
  std::vector<bool> in_basis(d, false);
  for (auto j : basis) in_basis[j] = true;
  for (std::size_t f = 0; f < d; ++f) {
    if (in_basis[f]) continue;
    FieldVec col = mat_apply(*binv, model.pi.col(f));
    FieldVec v(d, t.zero());
    for (std::size_t c = 0; c < n; ++c) v[basis[c]] = col[c];
    v[f] = -t.one();
    g.continuous.push_back(std::move(v));
  }
  for (const auto& gen : model.presentation.quasilattice.generators) {
    FieldVec ge(n, t.zero());
    for (std::size_t r = 0; r < n; ++r) ge[r] = gen[r].embed(t);
    FieldVec col = mat_apply(*binv, ge);
    FieldVec v(d, t.zero());
    for (std::size_t c = 0; c < n; ++c) v[basis[c]] = col[c];
    g.translates.push_back(std::move(v));
  }
  return g;
}

inline ReducedSpace reduced_space(const PolyhedronAnalysis& delta, const FieldVec& y,
                                  const FieldElement& eps,
                                  std::vector<std::size_t> on_hyperplane) {
  const Tower& t = delta.polyhedron.tower;
  std::size_t n = delta.polyhedron.n;
  ReducedSpace rs;
  rs.fixed_vertices = std::move(on_hyperplane);
  FieldElement scale = eps / dot(y, y);
  rs.origin = vec_scale(scale, y);
  FieldMat yrow = FieldMat::from_rows(t, {y});
  rs.frame = kernel(yrow);
  if (n == 1) {
    bool feasible = true;
    for (const auto& f : delta.polyhedron.facets)
      if (compare(dot(rs.origin, f.normal), f.offset) < 0) { feasible = false; break; }
    rs.slice_status = feasible ? PolyhedronStatus::ok : PolyhedronStatus::empty;
    if (feasible) rs.slice_vertices.push_back(rs.origin);
    return rs;
  }
  HPolyhedron slice;
  slice.n = n - 1;
  slice.tower = t;
  for (const auto& f : delta.polyhedron.facets) {
    FieldVec nrm;
    for (const auto& fr : rs.frame) nrm.push_back(dot(fr, f.normal));
    slice.facets.push_back(Facet{std::move(nrm), f.offset - dot(rs.origin, f.normal)});
  }
  Examination ex = examine(slice);
  rs.slice_status = ex.status;
  if (ex.status == PolyhedronStatus::ok) {
    for (const auto& v : ex.analysis->vertices) {
      FieldVec ambient = rs.origin;
      for (std::size_t k = 0; k < rs.frame.size(); ++k)
        ambient = vec_add(ambient, vec_scale(v.point[k], rs.frame[k]));
      rs.slice_vertices.push_back(std::move(ambient));
    }
    rs.slice = std::move(ex.analysis);
  }
  return rs;
}

}  // namespace detail

/**
 * Cut the model along H(Y, eps): validates both halves, rebuilds presentations
 * over the same quasilattice with witnesses carried over by facet index, and
 * attaches circle, group, and reduced-space data.
 */
inline CutResult cut(const DelzantModel& m, const CutSpec& raw_spec) {
  const DelzantPresentation& pres = m.presentation;
  const Tower& t = pres.tower;
  CutSpec spec = detail::normalize_spec(raw_spec);
  if (spec.y.size() != m.n) throw CutError("cut direction arity does not match the model");
  for (auto& c : spec.y) {
    if (!c.tower().is_prefix_of(t))
      throw CutError("cut direction uses field radicands unknown to the model");
    c = c.embed(t);
  }
  spec.epsilon = spec.epsilon.embed(t);
  auto wy = contains(pres.quasilattice, spec.y);
  if (!wy)
    throw CutError(
        "cut direction is not in the quasilattice; use the arbitrary-direction cut");
  CutValidation val = validate_cut(pres.analysis, spec);
  if (!val.ok()) {
    std::string msg = "cut does not produce valid halves";
    std::string sep = ": ";
    for (const auto& r : val.plus.reasons) { msg += sep + r; sep = "; "; }
    for (const auto& r : val.minus.reasons) { msg += sep + r; sep = "; "; }
    throw CutError(msg);
  }

  CutResult res;
  res.spec = spec;
  std::size_t d = pres.analysis.polyhedron.facets.size();

  auto assemble = [&](CutSideReport& side, bool plus_side)
      -> std::pair<DelzantModel, std::vector<std::size_t>> {
    PolyhedronAnalysis an = *std::move(side.analysis);
    side.analysis.reset();
    std::vector<std::size_t> origin = an.kept;  // input indexing: 0..d-1 originals, d = cut facet
    std::vector<MembershipWitness> wit;
    for (auto k : origin) {
      if (k < d) {
        wit.push_back(pres.witnesses[k]);
      } else {
        MembershipWitness w = *wy;
        if (!plus_side)
          for (auto& c : w.coefficients) c = -c;
        wit.push_back(std::move(w));
      }
    }
    DelzantModel model =
        build_model(make_presentation(std::move(an), pres.quasilattice, std::move(wit)));
    return {std::move(model), std::move(origin)};
  };
  auto [plus_model, plus_origin] = assemble(val.plus, true);
  auto [minus_model, minus_origin] = assemble(val.minus, false);

  // circle data on the plus side
  auto [pv, pbasis] = detail::side_chart_basis(plus_model.presentation.analysis, spec.y,
                                               spec.epsilon, plus_origin, d);
  res.circle.line = line_subgroup(pres.quasilattice, spec.y);
  res.circle.chart_vertex = pv;
  res.circle.basis = pbasis;
  {
    std::size_t n = m.n, dp = plus_model.d;
    FieldMat b(t, n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) b.at(r, c) = plus_model.pi.at(r, pbasis[c]);
    auto sol = solve(b, spec.y);
    if (!sol) throw CutError("chart basis does not express the cut direction");
    res.circle.b = *std::move(sol);
    res.circle.d1_order = pbasis;
    std::vector<bool> in_basis(dp, false);
    for (auto j : pbasis) in_basis[j] = true;
    for (std::size_t j = 0; j < dp; ++j)
      if (!in_basis[j]) res.circle.d1_order.push_back(j);
    res.circle.d1_exponents.assign(dp, t.zero());
    for (std::size_t c = 0; c < n; ++c) res.circle.d1_exponents[c] = res.circle.b[c];
    // a_plus: every non-basis plus facet over the chart basis
    auto binv = inverse(b);
    res.a_plus = FieldMat(t, n, dp - n);
    for (std::size_t k = n; k < dp; ++k) {
      FieldVec col = mat_apply(*binv, plus_model.pi.col(res.circle.d1_order[k]));
      for (std::size_t r = 0; r < n; ++r) res.a_plus.at(r, k - n) = col[r];
    }
  }
  res.plus_group = detail::side_group(plus_model, pbasis);
  {
    auto [mv, mbasis] = detail::side_chart_basis(minus_model.presentation.analysis, spec.y,
                                                 spec.epsilon, minus_origin, d);
    res.minus_group = detail::side_group(minus_model, mbasis);
  }
  res.reduced = detail::reduced_space(pres.analysis, spec.y, spec.epsilon,
                                      val.vertices_on_hyperplane);
  res.validation = std::move(val);
  res.plus_model = std::move(plus_model);
  res.minus_model = std::move(minus_model);
  res.plus_facet_origin = std::move(plus_origin);
  res.minus_facet_origin = std::move(minus_origin);
  return res;
}

/** The shared boundary data of a computed cut. */
inline const ReducedSpace& reduced_space_info(const CutResult& r) { return r.reduced; }

struct ArbitraryCutResult {
  CutResult result;
  GroupPresentation gamma;  // (extended lattice) / (original lattice)
  bool extended = false;    // false when Y already belonged to the lattice
  std::vector<std::string> notes;
};

/**
 * Cut along a direction that need not belong to the quasilattice: the lattice
 * is extended by Y, the quotient group Gamma is presented, and the cut runs
 * over the extended lattice. When Y already belongs, this is a plain cut.
 */
inline ArbitraryCutResult arbitrary_cut(const DelzantPresentation& pres, const CutSpec& raw_spec) {
  CutSpec spec = detail::normalize_spec(raw_spec);
  ArbitraryCutResult out;
  if (contains(pres.quasilattice, spec.y)) {
    out.result = cut(build_model(pres), spec);
    out.gamma = GroupPresentation{};
    out.extended = false;
    out.notes.push_back("the cut direction already belongs to the quasilattice;"
                        " the quotient group is trivial and the cut is unchanged");
    return out;
  }
  Quasilattice q = extend(pres.quasilattice, spec.y);
  out.gamma = quotient(q, pres.quasilattice);
  out.extended = true;
  std::vector<MembershipWitness> wit = pres.witnesses;
  for (auto& w : wit) w.coefficients.push_back(0);
  DelzantPresentation over_q =
      make_presentation(pres.analysis, std::move(q), std::move(wit));
  out.result = cut(build_model(std::move(over_q)), spec);
  out.notes.push_back(
      "the model over the extended quasilattice covers the original one;"
      " the original is its quotient by the group Gamma presented here");
  out.notes.push_back(
      "each cut space contains an open dense piece of the corresponding half-model");
  return out;
}

}  // namespace quasicut
