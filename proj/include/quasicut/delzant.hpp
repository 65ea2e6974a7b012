#pragma once

#include "quasicut/polyhedra.hpp"
#include "quasicut/quasilattice.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace quasicut {

/**
 * Input triple of the generalized Delzant procedure: an analyzed simple
 * pointed n-dimensional polyhedron, a quasilattice, and one membership witness
 * per facet normal.
 */
struct DelzantPresentation {
  PolyhedronAnalysis analysis;
  Quasilattice quasilattice;
  std::vector<MembershipWitness> witnesses;  // per retained facet, in facet order
  Tower tower;                               // common tower of normals and generators
};

inline DelzantPresentation make_presentation(
    PolyhedronAnalysis an, Quasilattice q,
    std::optional<std::vector<MembershipWitness>> witnesses = std::nullopt) {
  if (an.polyhedron.n != q.n)
    throw GeometryError("polyhedron and quasilattice dimensions differ");
  if (!an.pointed) throw GeometryError("presentation requires a pointed polyhedron");
  if (!an.simple) throw GeometryError("presentation requires a simple polyhedron");
  DelzantPresentation p;
  p.tower = an.polyhedron.tower;
  if (q.tower.is_prefix_of(p.tower)) {
    // keep
  } else if (p.tower.is_prefix_of(q.tower)) {
    p.tower = q.tower;
  } else {
    throw TowerError("polyhedron and quasilattice live in unrelated towers");
  }
  const auto& facets = an.polyhedron.facets;
  if (witnesses) {
    if (witnesses->size() != facets.size())
      throw LatticeError("witness count does not match facet count");
    for (std::size_t j = 0; j < facets.size(); ++j) {
      const IntVec& m = (*witnesses)[j].coefficients;
      if (m.size() != q.generators.size())
        throw LatticeError("witness arity does not match generator count");
      FieldVec acc(q.n, p.tower.zero());
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t r = 0; r < q.n; ++r)
          acc[r] = acc[r] + Rational(m[i]) * q.generators[i][r];
      for (std::size_t r = 0; r < q.n; ++r)
        if (!(acc[r] == facets[j].normal[r]))
          throw LatticeError("witness does not recombine to facet normal " +
                             std::to_string(j + 1));
    }
    p.witnesses = *std::move(witnesses);
  } else {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      auto w = contains(q, facets[j].normal);
      if (!w)
        throw LatticeError("facet normal " + std::to_string(j + 1) +
                           " is not in the quasilattice");
      p.witnesses.push_back(*std::move(w));
    }
  }
  p.analysis = std::move(an);
  p.quasilattice = std::move(q);
  return p;
}

inline DelzantPresentation make_presentation(const HPolyhedron& poly, Quasilattice q) {
  return make_presentation(analyze(poly), std::move(q));
}

/**
 * One vertex chart: active normals reordered to the front, every normal and
 * every quasilattice generator expressed over that active basis.
 */
struct VertexChart {
  std::size_t vertex = 0;
  std::vector<std::size_t> order;  // chart position -> facet index (active first, ascending)
  FieldMat A;                      // n x (d-n): non-basis normals over the basis
  FieldMat C;                      // n x (d+g): all normals, then all generators, over the basis
  std::vector<FieldVec> kernel_basis;  // d-n vectors in chart order spanning ker(pi)
  std::vector<FieldVec> alpha;         // dual basis of the active normals
};

/** Symbolic model produced by the generalized Delzant procedure. */
struct DelzantModel {
  DelzantPresentation presentation;
  std::size_t d = 0;  // facet count
  std::size_t n = 0;  // ambient dimension
  FieldMat pi;        // n x d, column j = X_j
  FieldVec lambda;    // facet offsets
  std::size_t base_vertex = 0;
  // rows encode sum_j c_j |z_j|^2 = rhs (column d), reduced echelon form;
  // the coefficient part of each row is a kernel vector of pi
  FieldMat level_system;  // (d-n) x (d+1)
  FieldMat moment_transform;               // n x n
  std::vector<std::size_t> moment_basis;   // facet indices S: Phi = T * (|z_S|^2 + lambda_S)
  bool is_compact = false;
  std::size_t model_dim = 0;
};

inline VertexChart presentation_chart(const DelzantPresentation& p, std::size_t vertex_index) {
  const PolyhedronAnalysis& an = p.analysis;
  std::size_t n = an.polyhedron.n, d = an.polyhedron.facets.size();
  const Vertex& v = an.vertices.at(vertex_index);
  if (v.active.size() != n)
    throw GeometryError("vertex chart requires a simple vertex");
  VertexChart ch;
  ch.vertex = vertex_index;
  ch.order = v.active;  // active sets are stored ascending
  {
    std::vector<bool> is_active(d, false);
    for (auto j : v.active) is_active[j] = true;
    for (std::size_t j = 0; j < d; ++j)
      if (!is_active[j]) ch.order.push_back(j);
  }
  const Tower& t = p.tower;
  FieldMat b(t, n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r)
      b.at(r, k) = an.polyhedron.facets[ch.order[k]].normal[r].embed(t);
  auto binv_opt = inverse(b);
  if (!binv_opt) throw GeometryError("active normals at the chart vertex are dependent");
  FieldMat binv = *std::move(binv_opt);
  std::size_t g = p.quasilattice.generators.size();
  ch.A = FieldMat(t, n, d - n);
  ch.C = FieldMat(t, n, d + g);
  for (std::size_t k = 0; k < n; ++k)
    ch.C.at(k, k) = t.one();
  for (std::size_t k = n; k < d + g; ++k) {
    FieldVec target(n, t.zero());
    if (k < d) {
      for (std::size_t r = 0; r < n; ++r)
        target[r] = an.polyhedron.facets[ch.order[k]].normal[r].embed(t);
    } else {
      for (std::size_t r = 0; r < n; ++r)
        target[r] = p.quasilattice.generators[k - d][r].embed(t);
    }
    FieldVec col = mat_apply(binv, target);
    for (std::size_t r = 0; r < n; ++r) {
      ch.C.at(r, k) = col[r];
      if (k < d) ch.A.at(r, k - n) = col[r];
    }
  }
  for (std::size_t tcol = 0; tcol < d - n; ++tcol) {
    FieldVec vk(d, t.zero());
    for (std::size_t r = 0; r < n; ++r) vk[r] = ch.A.at(r, tcol);
    vk[n + tcol] = -t.one();
    ch.kernel_basis.push_back(std::move(vk));
  }
  for (std::size_t r = 0; r < n; ++r) ch.alpha.push_back(binv.row(r));
  return ch;
}

inline DelzantModel build_model(DelzantPresentation pres) {
  DelzantModel m;
  std::size_t n = pres.analysis.polyhedron.n;
  std::size_t d = pres.analysis.polyhedron.facets.size();
  const Tower& t = pres.tower;
  m.d = d;
  m.n = n;
  m.pi = FieldMat(t, n, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t r = 0; r < n; ++r)
      m.pi.at(r, j) = pres.analysis.polyhedron.facets[j].normal[r].embed(t);
  if (rank(m.pi) != n) throw GeometryError("facet normals do not span R^n");
  for (std::size_t j = 0; j < d; ++j)
    m.lambda.push_back(pres.analysis.polyhedron.facets[j].offset.embed(t));
  m.base_vertex = 0;
  VertexChart base = presentation_chart(pres, m.base_vertex);
  m.level_system = FieldMat(t, d - n, d + 1);
  for (std::size_t k = 0; k < d - n; ++k) {
    const FieldVec& vk = base.kernel_basis[k];
    FieldElement rhs = t.zero();
    for (std::size_t j = 0; j < d; ++j) {
      m.level_system.at(k, base.order[j]) = vk[j];
      rhs = rhs - vk[j] * m.lambda[base.order[j]];
    }
    m.level_system.at(k, d) = rhs;
  }
  rref(m.level_system);
  {
    FieldMat b(t, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r)
        b.at(i, r) = m.pi.at(r, base.order[i]);  // row i = active normal
    auto binv = inverse(b);
    if (!binv) throw GeometryError("moment basis normals are dependent");
    m.moment_transform = *std::move(binv);
    m.moment_basis.assign(base.order.begin(), base.order.begin() + n);
  }
  m.is_compact = pres.analysis.polytope;
  m.model_dim = 2 * n;
  m.presentation = std::move(pres);
  return m;
}

inline VertexChart vertex_chart(const DelzantModel& m, std::size_t vertex_index) {
  return presentation_chart(m.presentation, vertex_index);
}

/** Per-vertex discrete chart groups and the resulting smoothness verdict. */
struct IsotropySummary {
  std::vector<GroupPresentation> per_vertex;
  bool smooth = false;
};

inline IsotropySummary isotropy(const DelzantModel& m) {
  IsotropySummary s;
  bool all_trivial = true;
  for (std::size_t vi = 0; vi < m.presentation.analysis.vertices.size(); ++vi) {
    VertexChart ch = presentation_chart(m.presentation, vi);
    std::vector<FieldVec> cols;
    for (std::size_t k = 0; k < ch.C.cols(); ++k) cols.push_back(ch.C.col(k));
    Quasilattice chart_group = make_quasilattice(m.n, std::move(cols));
    GroupPresentation gp = quotient(chart_group, standard_lattice(m.n, m.presentation.tower));
    all_trivial = all_trivial && gp.trivial();
    s.per_vertex.push_back(std::move(gp));
  }
  bool q_lattice = m.presentation.quasilattice.free_rank == m.n;
  s.smooth = all_trivial && q_lattice;
  return s;
}

struct FixedPoint {
  std::size_t vertex = 0;
  VertexChart chart;
};

/** Torus-fixed points of the model, one per vertex of the polyhedron. */
inline std::vector<FixedPoint> fixed_points(const DelzantModel& m) {
  std::vector<FixedPoint> out;
  for (std::size_t vi = 0; vi < m.presentation.analysis.vertices.size(); ++vi)
    out.push_back(FixedPoint{vi, presentation_chart(m.presentation, vi)});
  return out;
}

}  // namespace quasicut
