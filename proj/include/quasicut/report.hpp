#pragma once

#include "quasicut/blowup.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace quasicut {

inline std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << rational_num(r);
  if (rational_den(r) != 1) os << "/" << rational_den(r);
  return os.str();
}

/** Basis product name for a coefficient slot: the radical names of the set bits. */
inline std::string basis_name(const Tower& t, std::size_t mask) {
  std::string s;
  for (std::size_t i = 0; i < t.depth(); ++i) {
    if (!(mask & (std::size_t(1) << i))) continue;
    if (!s.empty()) s += "*";
    s += t.level(i).name;
  }
  return s;
}

/** Field elements print as rational combinations of radical products. */
inline std::string format_element(const FieldElement& e) {
  const Tower& t = e.tower();
  std::string s;
  for (std::size_t m = 0; m < e.coeffs().size(); ++m) {
    const Rational& c = e.coeff(m);
    if (c == 0) continue;
    std::string name = basis_name(t, m);
    Rational a = c < 0 ? Rational(-c) : c;
    std::string term;
    if (name.empty()) term = format_rational(a);
    else if (a == 1) term = name;
    else term = format_rational(a) + "*" + name;
    if (s.empty()) s = (c < 0 ? "-" : "") + term;
    else s += (c < 0 ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

inline std::string format_vec(const FieldVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_element(v[i]);
  }
  return s + ")";
}

inline std::string format_int_vec(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

inline std::string format_indices(const std::vector<std::size_t>& v) {
  if (v.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

namespace detail {

// A coefficient usable as a factor in front of |z|^2: wrap sums in parens.
inline std::string factor_string(const FieldElement& e) {
  std::string s = format_element(e);
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace detail

/** One level-system row as an equation in the squared chart coordinates. */
inline std::string format_level_row(const FieldMat& ls, std::size_t r) {
  std::string s;
  std::size_t d = ls.cols() - 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (ls.at(r, j).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += detail::factor_string(ls.at(r, j)) + "|z" + std::to_string(j) + "|^2";
  }
  if (s.empty()) s = "0";
  return s + " = " + format_element(ls.at(r, d));
}

inline void report_tower(std::ostream& os, const Tower& t) {
  if (t.depth() == 0) {
    os << "field: rationals\n";
    return;
  }
  os << "field tower:\n";
  for (std::size_t i = 0; i < t.depth(); ++i) {
    FieldElement rad = t.prefix(i).element(t.level(i).radicand);
    os << "  " << t.level(i).name << " = sqrt(" << format_element(rad) << ")\n";
  }
}

inline void report_polyhedron(std::ostream& os, const HPolyhedron& p) {
  os << "ambient dimension: " << p.n << "\n";
  os << "facets: " << p.facets.size() << "\n";
  for (std::size_t j = 0; j < p.facets.size(); ++j)
    os << "  [" << j << "] normal " << format_vec(p.facets[j].normal)
       << ", offset " << format_element(p.facets[j].offset) << "\n";
}

inline void report_analysis(std::ostream& os, const PolyhedronAnalysis& an) {
  os << "kept facets: " << format_indices(an.kept) << "\n";
  os << "dropped facets: " << format_indices(an.dropped) << "\n";
  os << "dimension: " << an.dimension << "\n";
  os << "vertices: " << an.vertices.size() << "\n";
  for (std::size_t i = 0; i < an.vertices.size(); ++i)
    os << "  [" << i << "] " << format_vec(an.vertices[i].point) << " on facets "
       << format_indices(an.vertices[i].active) << "\n";
  os << "recession rays: " << an.recession.size() << "\n";
  for (const auto& r : an.recession) os << "  " << format_vec(r) << "\n";
  os << "pointed: " << (an.pointed ? "yes" : "no")
     << ", simple: " << (an.simple ? "yes" : "no")
     << ", polytope: " << (an.polytope ? "yes" : "no") << "\n";
  if (an.pointed) {
    CombinatorialType ct = combinatorial_type(an);
    os << "combinatorial type: " << ct.facet_count << " facets, " << ct.vertex_count
       << " vertices, simplex: " << (ct.simplex_type ? "yes" : "no") << "\n";
  }
}

inline void report_quasilattice(std::ostream& os, const Quasilattice& q) {
  os << "quasilattice generators: " << q.generators.size() << "\n";
  for (std::size_t i = 0; i < q.generators.size(); ++i)
    os << "  [" << i << "] " << format_vec(q.generators[i]) << "\n";
  os << "relation rank: " << q.relations.size() << "\n";
  for (const auto& r : q.relations) os << "  " << format_int_vec(r) << "\n";
  os << "free rank: " << q.free_rank << "\n";
}

inline std::string format_group(const GroupPresentation& g) {
  if (g.trivial()) return "trivial";
  std::string s;
  if (g.free_rank > 0) s = "free rank " + std::to_string(g.free_rank);
  if (!g.torsion.empty()) {
    if (!s.empty()) s += ", ";
    s += "torsion";
    for (const auto& t : g.torsion) {
      std::ostringstream os;
      os << " " << t;
      s += os.str();
    }
  }
  return s;
}

inline void report_model(std::ostream& os, const DelzantModel& m) {
  os << "facets: " << m.d << ", ambient dimension: " << m.n
     << ", model dimension: " << m.model_dim << "\n";
  os << "compact: " << (m.is_compact ? "yes" : "no") << "\n";
  os << "offsets lambda: " << format_vec(m.lambda) << "\n";
  os << "level system (" << m.level_system.rows() << " rows):\n";
  for (std::size_t r = 0; r < m.level_system.rows(); ++r)
    os << "  " << format_level_row(m.level_system, r) << "\n";
  os << "base chart at vertex [" << m.base_vertex << "]\n";
  IsotropySummary iso = isotropy(m);
  os << "isotropy by vertex:\n";
  for (std::size_t v = 0; v < iso.per_vertex.size(); ++v)
    os << "  [" << v << "] " << format_group(iso.per_vertex[v]) << "\n";
  os << "smooth: " << (iso.smooth ? "yes" : "no") << "\n";
  os << "fixed points: " << fixed_points(m).size() << "\n";
}

inline void report_toric_group(std::ostream& os, const ToricGroupData& g,
                               const char* label) {
  os << label << " (inside the " << g.m << "-torus):\n";
  os << "  continuous directions: " << g.continuous.size() << "\n";
  for (const auto& v : g.continuous) os << "    " << format_vec(v) << "\n";
  os << "  translates: " << g.translates.size() << "\n";
  for (const auto& v : g.translates) os << "    " << format_vec(v) << "\n";
}

inline void report_line_subgroup(std::ostream& os, const LineSubgroup& ls) {
  os << "line group along " << format_vec(ls.direction) << ": ";
  switch (ls.kind) {
    case LambdaKind::trivial: os << "trivial (order 1)"; break;
    case LambdaKind::finite_cyclic: os << "finite cyclic of order " << ls.order; break;
    case LambdaKind::dense: os << "dense"; break;
  }
  os << "\n";
  os << "scalar generators: ";
  if (ls.scalar_gens.empty()) os << "(none)";
  for (std::size_t i = 0; i < ls.scalar_gens.size(); ++i) {
    if (i) os << ", ";
    os << format_element(ls.scalar_gens[i]);
  }
  os << "\n";
}

inline void report_cut(std::ostream& os, const CutResult& cr) {
  os << "== cut ==\n";
  os << "direction Y: " << format_vec(cr.spec.y) << "\n";
  os << "level eps: " << format_element(cr.spec.epsilon) << "\n";
  os << "input vertices on the hyperplane: "
     << format_indices(cr.validation.vertices_on_hyperplane) << "\n";
  report_line_subgroup(os, cr.circle.line);
  if (cr.circle.chart_vertex)
    os << "chart vertex: plus side [" << *cr.circle.chart_vertex << "]\n";
  else
    os << "chart vertex: none off the hyperplane, using a facet basis\n";
  os << "chart basis (plus facets): " << format_indices(cr.circle.basis) << "\n";
  os << "Y over the chart basis: " << format_vec(cr.circle.b) << "\n";
  os << "rotation exponents (chart order " << format_indices(cr.circle.d1_order)
     << "): " << format_vec(cr.circle.d1_exponents) << "\n";

  os << "== plus side ==\n";
  os << "facet origins: " << format_indices(cr.plus_facet_origin)
     << " (cut facet = input facet count)\n";
  report_analysis(os, cr.plus_model.presentation.analysis);
  report_model(os, cr.plus_model);
  report_toric_group(os, cr.plus_group, "reduction group");

  os << "== minus side ==\n";
  os << "facet origins: " << format_indices(cr.minus_facet_origin) << "\n";
  report_analysis(os, cr.minus_model.presentation.analysis);
  report_model(os, cr.minus_model);
  report_toric_group(os, cr.minus_group, "reduction group");

  os << "== reduced piece ==\n";
  os << "hyperplane point: " << format_vec(cr.reduced.origin) << "\n";
  os << "hyperplane frame:\n";
  for (const auto& f : cr.reduced.frame) os << "  " << format_vec(f) << "\n";
  switch (cr.reduced.slice_status) {
    case PolyhedronStatus::ok: {
      os << "slice vertices: " << cr.reduced.slice_vertices.size() << "\n";
      for (const auto& v : cr.reduced.slice_vertices) os << "  " << format_vec(v) << "\n";
      break;
    }
    case PolyhedronStatus::empty:
      os << "slice: empty\n";
      break;
    case PolyhedronStatus::low_dimension:
      os << "slice: lower-dimensional inside the hyperplane\n";
      break;
  }
  os << "fixed input vertices: " << format_indices(cr.reduced.fixed_vertices) << "\n";
}

inline void report_admissibility(std::ostream& os, const AdmissibilityReport& adm) {
  os << "== admissibility ==\n";
  os << "dual pairings: " << format_vec(adm.pairings) << "\n";
  if (adm.witness)
    os << "direction over the generators: " << format_int_vec(adm.witness->coefficients)
       << "\n";
  os << "admissible: " << (adm.admissible ? "yes" : "no") << "\n";
  for (const auto& r : adm.reasons) os << "  " << r << "\n";
}

inline void report_threshold(std::ostream& os, const MaxEpsilonResult& me) {
  os << "== level threshold ==\n";
  os << "candidate levels: ";
  if (me.candidates.empty()) os << "(none)";
  for (std::size_t i = 0; i < me.candidates.size(); ++i) {
    if (i) os << ", ";
    os << format_element(me.candidates[i]);
  }
  os << "\n";
  for (const auto& t : me.tests) {
    os << "  probe " << format_element(t.epsilon) << ": ";
    if (t.status != PolyhedronStatus::ok) os << "degenerate";
    else
      os << t.facet_count << " facets, " << t.vertex_count << " vertices, simplex: "
         << (t.simplex_type ? "yes" : "no");
    os << "\n";
  }
  if (me.finite) os << "largest simplex-type level: " << format_element(me.value) << "\n";
  else os << "largest simplex-type level: unbounded\n";
}

inline void report_local_model(std::ostream& os, const LocalModel& lm) {
  os << "== local model at the vertex ==\n";
  os << "cone facets:\n";
  for (const auto& f : lm.cone.analysis.polyhedron.facets)
    os << "  normal " << format_vec(f.normal) << "\n";
  os << "chart group Gamma: " << format_group(lm.gamma) << "\n";
  os << "chart generators in the torus:\n";
  for (const auto& g : lm.gamma_gens) os << "  " << format_vec(g) << "\n";
  os << "dual basis:\n";
  for (const auto& a : lm.alpha) os << "  " << format_vec(a) << "\n";
  os << "dual pairings with Y: " << format_vec(lm.pairings) << "\n";
  report_toric_group(os, lm.plus_exponents, "plus piece exponents");
  report_toric_group(os, lm.minus_exponents, "minus piece exponents");
  os << "line group generators recombining over the chart: "
     << lm.lambda_correspondence.size() << "\n";
  for (const auto& lc : lm.lambda_correspondence)
    os << "  " << format_element(lc.scalar) << " -> " << format_int_vec(lc.witness)
       << "\n";
}

}  // namespace quasicut
