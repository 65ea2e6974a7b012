#pragma once

#include "quasicut/linalg.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace quasicut {

/** Closed half-space {mu : <mu, normal> >= offset}. */
struct Facet {
  FieldVec normal;
  FieldElement offset;
};

/** Intersection of finitely many half-spaces in R^n, normals over a field tower. */
struct HPolyhedron {
  std::size_t n = 0;
  Tower tower;
  std::vector<Facet> facets;
};

struct Vertex {
  FieldVec point;
  std::vector<std::size_t> active;  // facets satisfied with equality
};

struct PolyhedronAnalysis {
  HPolyhedron polyhedron;            // irredundant facet list
  std::vector<std::size_t> kept;     // input index of each retained facet
  std::vector<std::size_t> dropped;  // input indices of redundant facets
  std::vector<Vertex> vertices;      // discovery order: lexicographic by solving subset
  std::vector<FieldVec> recession;   // extreme rays (pointed case), first coordinate scaled to +-1
  std::size_t dimension = 0;
  bool pointed = false;
  bool simple = false;
  bool polytope = false;
};

enum class PolyhedronStatus { ok, empty, low_dimension };

struct Examination {
  PolyhedronStatus status = PolyhedronStatus::ok;
  std::optional<PolyhedronAnalysis> analysis;  // present when status == ok
  std::size_t dimension = 0;                   // found dimension (when not empty)
};

namespace detail {

inline bool vec_equal(const FieldVec& a, const FieldVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < m - (k - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct CoreResult {
  bool empty = false;
  std::vector<Vertex> vertices;
  std::vector<FieldVec> rays;
  std::size_t dimension = 0;
  bool pointed = false;
};

inline CoreResult polyhedron_core(const HPolyhedron& p);

// Pointed (full-rank normals) case: exact subset enumeration.
inline CoreResult core_pointed(const HPolyhedron& p) {
  CoreResult res;
  res.pointed = true;
  std::size_t d = p.facets.size(), n = p.n;
  auto feasible = [&](const FieldVec& pt) {
    for (const auto& f : p.facets)
      if (compare(dot(pt, f.normal), f.offset) < 0) return false;
    return true;
  };
  if (n <= d) {
    std::vector<std::size_t> sub(n);
    for (std::size_t i = 0; i < n; ++i) sub[i] = i;
    do {
      FieldMat m(p.tower, n, n);
      FieldVec rhs(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = p.facets[sub[i]].normal[j];
        rhs[i] = p.facets[sub[i]].offset;
      }
      auto pt = solve(m, rhs);
      if (!pt || !feasible(*pt)) continue;
      bool seen = false;
      for (const auto& v : res.vertices)
        if (vec_equal(v.point, *pt)) { seen = true; break; }
      if (seen) continue;
      Vertex v;
      v.point = *pt;
      for (std::size_t j = 0; j < d; ++j)
        if (compare(dot(v.point, p.facets[j].normal), p.facets[j].offset) == 0)
          v.active.push_back(j);
      res.vertices.push_back(std::move(v));
    } while (next_combination(sub, d));
  }
  if (res.vertices.empty()) {
    res.empty = true;
    return res;
  }
  // extreme rays of the recession cone from (n-1)-subsets
  auto dir_feasible = [&](const FieldVec& w) {
    for (const auto& f : p.facets)
      if (dot(w, f.normal).sign() < 0) return false;
    return true;
  };
  auto push_ray = [&](const FieldVec& w) {
    for (const auto& r : res.rays)
      if (vec_equal(r, w)) return;
    res.rays.push_back(w);
  };
  std::vector<std::size_t> sub(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) sub[i] = i;
  bool more = n - 1 <= d;
  while (more) {
    FieldMat m(p.tower, n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = p.facets[sub[i]].normal[j];
    auto ker = kernel(m);
    if (ker.size() == 1) {
      FieldVec w = ker[0];
      std::size_t nz = 0;
      while (w[nz].is_zero()) ++nz;
      w = vec_scale(w[nz].inverse(), w);
      if (dir_feasible(w)) push_ray(w);
      FieldVec neg = vec_neg(w);
      if (dir_feasible(neg)) push_ray(neg);
    }
    more = n >= 1 && !sub.empty() ? next_combination(sub, d) : false;
    if (sub.empty()) break;  // n == 1: single empty subset
  }
  // dimension: affine hull of vertices plus recession directions
  std::vector<FieldVec> span_rows;
  for (std::size_t i = 1; i < res.vertices.size(); ++i)
    span_rows.push_back(vec_sub(res.vertices[i].point, res.vertices[0].point));
  for (const auto& r : res.rays) span_rows.push_back(r);
  res.dimension =
      span_rows.empty() ? 0 : rank(FieldMat::from_rows(p.tower, span_rows));
  return res;
}

// Rank-deficient normals: split off the lineality space and recurse on the
// pointed image in row-space coordinates.
inline CoreResult core_lineality(const HPolyhedron& p, const std::vector<FieldVec>& basis) {
  CoreResult res;
  res.pointed = false;
  std::size_t rdim = basis.size();
  FieldMat b = FieldMat::from_rows(p.tower, basis);  // rdim x n
  HPolyhedron sub;
  sub.n = rdim;
  sub.tower = p.tower;
  for (const auto& f : p.facets)
    sub.facets.push_back(Facet{mat_apply(b, f.normal), f.offset});
  CoreResult inner = polyhedron_core(sub);
  if (inner.empty) {
    res.empty = true;
    return res;
  }
  res.dimension = (p.n - rdim) + inner.dimension;
  FieldMat bt = transpose(b);
  for (const auto& l : kernel(b)) {  // lineality directions
    res.rays.push_back(l);
    res.rays.push_back(vec_neg(l));
  }
  for (const auto& r : inner.rays) res.rays.push_back(mat_apply(bt, r));
  return res;
}

inline CoreResult polyhedron_core(const HPolyhedron& p) {
  // pick a row basis of the normal span
  std::vector<FieldVec> basis;
  std::size_t r = 0;
  for (const auto& f : p.facets) {
    basis.push_back(f.normal);
    std::size_t nr = rank(FieldMat::from_rows(p.tower, basis));
    if (nr > r) r = nr; else basis.pop_back();
    if (r == p.n) break;
  }
  if (r == 0) {
    // no effective constraints: R^n or empty
    CoreResult res;
    for (const auto& f : p.facets)
      if (f.offset.sign() > 0) { res.empty = true; return res; }
    res.dimension = p.n;
    res.pointed = false;
    for (std::size_t i = 0; i < p.n; ++i) {
      FieldVec e(p.n, p.tower.zero());
      e[i] = p.tower.one();
      res.rays.push_back(e);
      res.rays.push_back(vec_neg(e));
    }
    return res;
  }
  if (r < p.n) return core_lineality(p, basis);
  return core_pointed(p);
}

}  // namespace detail

/**
 * Full structural examination without throwing: vertices, rays, dimension,
 * flags, redundant-facet removal. Use analyze() for the throwing contract.
 *
 * Redundant facets are those whose equality set inside the polyhedron has
 * dimension below n-1 (including duplicates of an earlier facet up to positive
 * scaling); they are dropped and all data is recomputed against the reduced
 * list, so the stored active sets reference irredundant facets only.
 */
inline Examination examine(const HPolyhedron& p) {
  if (p.n < 1) throw GeometryError("ambient dimension must be at least 1");
  if (p.facets.empty()) throw GeometryError("polyhedron needs at least one facet");
  for (const auto& f : p.facets)
    if (f.normal.size() != p.n)
      throw GeometryError("facet normal arity does not match ambient dimension");

  Examination ex;
  detail::CoreResult core = detail::polyhedron_core(p);
  if (core.empty) {
    ex.status = PolyhedronStatus::empty;
    return ex;
  }
  // The redundancy rules below presume a full-dimensional set (a facet is the
  // one whose equality face has dimension n-1), so settle dimension first.
  if (core.dimension < p.n) {
    ex.status = PolyhedronStatus::low_dimension;
    ex.dimension = core.dimension;
    return ex;
  }

  std::vector<std::size_t> dropped;
  std::vector<bool> is_dropped(p.facets.size(), false);
  if (core.pointed) {
    // duplicates up to positive scaling: keep the first occurrence
    for (std::size_t j = 0; j < p.facets.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (is_dropped[i]) continue;
        const FieldVec& xi = p.facets[i].normal;
        const FieldVec& xj = p.facets[j].normal;
        std::size_t nz = 0;
        while (nz < xi.size() && xi[nz].is_zero()) ++nz;
        if (nz == xi.size()) continue;
        if (xj[nz].is_zero()) continue;
        FieldElement c = xj[nz] / xi[nz];
        if (c.sign() <= 0) continue;
        if (detail::vec_equal(xj, vec_scale(c, xi)) &&
            p.facets[j].offset == c * p.facets[i].offset) {
          is_dropped[j] = true;
          dropped.push_back(j);
          break;
        }
      }
    }
    // equality-set dimension per remaining facet
    for (std::size_t j = 0; j < p.facets.size(); ++j) {
      if (is_dropped[j]) continue;
      std::vector<const Vertex*> on;
      for (const auto& v : core.vertices)
        if (std::find(v.active.begin(), v.active.end(), j) != v.active.end())
          on.push_back(&v);
      bool redundant;
      if (on.empty()) {
        redundant = true;
      } else {
        std::vector<FieldVec> rows;
        for (std::size_t i = 1; i < on.size(); ++i)
          rows.push_back(vec_sub(on[i]->point, on[0]->point));
        for (const auto& r : core.rays)
          if (dot(r, p.facets[j].normal).is_zero()) rows.push_back(r);
        std::size_t fdim =
            rows.empty() ? 0 : rank(FieldMat::from_rows(p.tower, rows));
        redundant = fdim + 1 < p.n;
      }
      if (redundant) {
        is_dropped[j] = true;
        dropped.push_back(j);
      }
    }
    std::sort(dropped.begin(), dropped.end());
  }

  PolyhedronAnalysis an;
  an.polyhedron.n = p.n;
  an.polyhedron.tower = p.tower;
  for (std::size_t j = 0; j < p.facets.size(); ++j) {
    if (is_dropped[j]) continue;
    an.polyhedron.facets.push_back(p.facets[j]);
    an.kept.push_back(j);
  }
  an.dropped = dropped;
  detail::CoreResult fin =
      dropped.empty() ? std::move(core) : detail::polyhedron_core(an.polyhedron);
  an.vertices = std::move(fin.vertices);
  an.recession = std::move(fin.rays);
  an.dimension = fin.dimension;
  an.pointed = fin.pointed && !an.vertices.empty();
  an.simple = true;
  for (const auto& v : an.vertices)
    if (v.active.size() != p.n) { an.simple = false; break; }
  an.polytope = an.pointed && an.recession.empty();
  ex.dimension = an.dimension;
  if (an.dimension < p.n) {
    ex.status = PolyhedronStatus::low_dimension;
    return ex;
  }
  ex.analysis = std::move(an);
  return ex;
}

/** Examination with the error contract: throws on empty or low-dimensional input. */
inline PolyhedronAnalysis analyze(const HPolyhedron& p) {
  Examination ex = examine(p);
  switch (ex.status) {
    case PolyhedronStatus::empty:
      throw GeometryError("polyhedron is empty");
    case PolyhedronStatus::low_dimension:
      throw GeometryError("polyhedron has dimension " + std::to_string(ex.dimension) +
                          " < ambient " + std::to_string(p.n));
    case PolyhedronStatus::ok:
      break;
  }
  return *std::move(ex.analysis);
}

enum class CutSide { ge, le };

/**
 * Intersect with the half-space on the given side of H(Y, eps). The new facet
 * is appended to the input list before irredundancy is re-established; the
 * returned analysis' kept/dropped indices refer to that appended list (the cut
 * facet has input index p.facets.size()).
 */
inline PolyhedronAnalysis halfspace_cut(const HPolyhedron& p, const FieldVec& y,
                                        const FieldElement& eps, CutSide side) {
  HPolyhedron q = p;
  Tower t = p.tower;
  for (const auto& c : y)
    if (t.is_prefix_of(c.tower()))
      t = c.tower().depth() > t.depth() ? c.tower() : t;
    else if (!c.tower().is_prefix_of(t))
      throw TowerError("cut direction and polyhedron live in unrelated towers");
  if (!t.same_as(p.tower)) {
    q.tower = t;
    for (auto& f : q.facets) {
      for (auto& c : f.normal) c = c.embed(t);
      f.offset = f.offset.embed(t);
    }
  }
  FieldVec ye = y;
  for (auto& c : ye) c = c.embed(t);
  if (side == CutSide::ge)
    q.facets.push_back(Facet{std::move(ye), eps.embed(t)});
  else
    q.facets.push_back(Facet{vec_neg(ye), (-eps).embed(t)});
  return analyze(q);
}

struct CombinatorialType {
  std::size_t facet_count = 0;
  std::size_t vertex_count = 0;
  bool simplex_type = false;
};

/** Facet/vertex counts and the simplex-type predicate (pointed analyses only). */
inline CombinatorialType combinatorial_type(const PolyhedronAnalysis& an) {
  if (!an.pointed) throw GeometryError("combinatorial type requires a pointed polyhedron");
  CombinatorialType t;
  t.facet_count = an.polyhedron.facets.size();
  t.vertex_count = an.vertices.size();
  std::size_t n = an.polyhedron.n;
  t.simplex_type = (t.facet_count == n + 1) && (t.vertex_count == n + 1);
  if (t.simplex_type) {
    std::vector<std::size_t> sub(n);
    for (std::size_t i = 0; i < n; ++i) sub[i] = i;
    do {
      bool hit = false;
      for (const auto& v : an.vertices) {
        bool all = true;
        for (auto j : sub)
          if (std::find(v.active.begin(), v.active.end(), j) == v.active.end()) {
            all = false;
            break;
          }
        if (all) { hit = true; break; }
      }
      if (!hit) { t.simplex_type = false; break; }
    } while (detail::next_combination(sub, t.facet_count));
  }
  return t;
}

/** The cone of the polyhedron at a vertex, translated to the origin. */
inline HPolyhedron vertex_cone(const PolyhedronAnalysis& an, std::size_t vertex_index) {
  const Vertex& v = an.vertices.at(vertex_index);
  HPolyhedron cone;
  cone.n = an.polyhedron.n;
  cone.tower = an.polyhedron.tower;
  for (auto j : v.active)
    cone.facets.push_back(Facet{an.polyhedron.facets[j].normal, an.polyhedron.tower.zero()});
  return cone;
}

}  // namespace quasicut
