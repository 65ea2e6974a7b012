#pragma once

#include "quasicut/intlinalg.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace quasicut {

/**
 * Finitely generated subgroup of R^n given by generators that span R^n over R.
 * The generator list is the data; no canonical basis exists in general (the
 * group may be dense), so equality of two quasilattices means mutual
 * containment of generators.
 */
struct Quasilattice {
  std::size_t n = 0;
  Tower tower;
  std::vector<FieldVec> generators;
  IntMat relations;           // basis of {m in Z^q : sum m_i Y_i = 0}
  std::size_t free_rank = 0;  // q - rank(relations)
};

struct MembershipWitness {
  IntVec coefficients;  // sum coefficients[i] * Y_i = target
};

inline Quasilattice make_quasilattice(std::size_t n, std::vector<FieldVec> gens) {
  if (n < 1) throw LatticeError("ambient dimension must be at least 1");
  if (gens.empty()) throw LatticeError("quasilattice needs at least one generator");
  Tower t = detail::common_tower(gens);
  for (auto& g : gens) {
    if (g.size() != n) throw LatticeError("generator arity does not match ambient dimension");
    for (auto& c : g) c = c.embed(t);
  }
  if (rank(FieldMat::from_rows(t, gens)) != n)
    throw LatticeError("generators do not span R^n over R");
  Quasilattice q;
  q.n = n;
  q.tower = t;
  q.generators = std::move(gens);
  q.relations = z_relations(q.generators);
  q.free_rank = q.generators.size() - q.relations.size();
  return q;
}

/** Z^n as a quasilattice (standard basis vectors over the given tower). */
inline Quasilattice standard_lattice(std::size_t n, const Tower& t) {
  std::vector<FieldVec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    FieldVec e(n, t.zero());
    e[i] = t.one();
    gens.push_back(std::move(e));
  }
  return make_quasilattice(n, std::move(gens));
}

/** Integer coefficients expressing x over the generators, if x lies in Q. */
inline std::optional<MembershipWitness> contains(const Quasilattice& q, const FieldVec& x) {
  if (x.size() != q.n) throw LatticeError("membership query arity mismatch");
  auto sol = z_solve(q.generators, x);
  if (!sol) return std::nullopt;
  return MembershipWitness{*std::move(sol)};
}

enum class LambdaKind { trivial, finite_cyclic, dense };

/**
 * The scalar group {l in R : l*Y in Q} together with the classification of its
 * image Lambda = exp(2*pi*i*l) in the circle.
 */
struct LineSubgroup {
  FieldVec direction;
  std::vector<FieldElement> scalar_gens;     // canonical Z-basis (Hermite form over the field basis)
  std::vector<MembershipWitness> witnesses;  // one per scalar generator, for l*Y
  LambdaKind kind = LambdaKind::trivial;
  Integer order = 1;  // |Lambda| when finite
};

namespace detail {

// Canonical Z-basis of {l : l*X in Q}: integer kernel of the pairwise wedge
// conditions (all 2x2 minors of [sum m_i Y_i ; X] vanish), each kernel vector
// converted to its proportionality scalar, then Hermite-reduced.
inline std::vector<FieldElement> scalar_group(const Quasilattice& q, const FieldVec& x) {
  Tower t = q.tower;
  FieldVec xe = x;
  Tower xt = common_tower({x});
  if (xt.is_prefix_of(t)) {
    for (auto& c : xe) c = c.embed(t);
  } else if (t.is_prefix_of(xt)) {
    t = xt;
  } else {
    throw TowerError("direction and quasilattice live in unrelated towers");
  }
  std::size_t nz = 0;
  while (nz < xe.size() && xe[nz].is_zero()) ++nz;
  if (nz == xe.size()) throw LatticeError("direction must be nonzero");

  std::size_t n = q.n;
  std::vector<FieldVec> pair_vecs;  // one per generator: wedge coordinates vs x
  for (const auto& g : q.generators) {
    FieldVec w;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = r + 1; s < n; ++s)
        w.push_back(g[r].embed(t) * xe[s] - g[s].embed(t) * xe[r]);
    pair_vecs.push_back(std::move(w));
  }
  IntMat mult = z_relations(pair_vecs);  // multiplier vectors m with sum m_i Y_i parallel to x
  std::vector<FieldVec> scalars;
  FieldElement pivot_inv = xe[nz].inverse();
  for (const auto& m : mult) {
    FieldElement num = t.zero();
    for (std::size_t i = 0; i < q.generators.size(); ++i)
      num = num + Rational(m[i]) * q.generators[i][nz].embed(t);
    FieldElement l = num * pivot_inv;
    if (!l.is_zero()) scalars.push_back(FieldVec{l});
  }
  std::vector<FieldElement> out;
  for (const auto& row : z_span_basis(scalars)) out.push_back(row[0]);
  return out;
}

}  // namespace detail

/** Q^1 = {l : l*Y in Q} with its circle-image classification. Requires Y in Q. */
inline LineSubgroup line_subgroup(const Quasilattice& q, const FieldVec& y) {
  LineSubgroup ls;
  ls.direction = y;
  ls.scalar_gens = detail::scalar_group(q, y);
  if (!contains(q, y)) throw LatticeError("line direction does not belong to the quasilattice");
  for (const auto& l : ls.scalar_gens) {
    auto w = contains(q, vec_scale(l, y));
    if (!w) throw LatticeError("internal: scalar generator lost membership");
    ls.witnesses.push_back(*std::move(w));
  }
  if (ls.scalar_gens.empty()) {
    ls.kind = LambdaKind::trivial;
    ls.order = 1;
  } else if (ls.scalar_gens.size() == 1 && ls.scalar_gens[0].is_rational()) {
    Rational g = ls.scalar_gens[0].rational_value();
    ls.order = rational_den(g);
    ls.kind = ls.order == 1 ? LambdaKind::trivial : LambdaKind::finite_cyclic;
  } else {
    ls.kind = LambdaKind::dense;
    ls.order = 0;
  }
  return ls;
}

/** Span_Z of Qt together with one more vector. */
inline Quasilattice extend(const Quasilattice& qt, const FieldVec& y) {
  bool zero = true;
  for (const auto& c : y)
    if (!c.is_zero()) { zero = false; break; }
  if (zero) throw LatticeError("cannot extend by the zero vector");
  std::vector<FieldVec> gens = qt.generators;
  gens.push_back(y);
  return make_quasilattice(qt.n, std::move(gens));
}

/** Finitely generated abelian group in Smith-canonical form. */
struct GroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors >= 2, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

/**
 * Gamma = Q/Qt: expresses each Qt generator over Q's generators, stacks those
 * rows with Q's relation lattice, and reads the cokernel off the Smith form.
 */
inline GroupPresentation quotient(const Quasilattice& q, const Quasilattice& qt) {
  if (q.n != qt.n) throw LatticeError("quotient of quasilattices in different dimensions");
  IntMat stack = q.relations;
  for (const auto& g : qt.generators) {
    auto w = contains(q, g);
    if (!w) throw LatticeError("quotient requires the subgroup to be contained in the group");
    stack.push_back(w->coefficients);
  }
  std::size_t qn = q.generators.size();
  GroupPresentation pres;
  if (stack.empty()) {
    pres.free_rank = qn;
    return pres;
  }
  std::vector<Integer> inv = smith_invariants(stack);
  pres.free_rank = qn - inv.size();
  for (const auto& s : inv)
    if (s > 1) pres.torsion.push_back(s);
  return pres;
}

/**
 * A positive scalar t with t*X in Q, or absent when the ray misses Q. When the
 * scalar group has rank one the result is its positive generator (the least
 * positive choice); dense scalar groups have no least element, so the positive
 * generator of smallest height (max of numerator/denominator magnitudes over
 * the field basis, first on ties) is reported.
 */
inline std::optional<FieldElement> ray_scale(const Quasilattice& q, const FieldVec& x) {
  std::vector<FieldElement> gens = detail::scalar_group(q, x);
  if (gens.empty()) return std::nullopt;
  auto height = [](const FieldElement& e) {
    Integer h = 0;
    for (const auto& c : e.coeffs()) {
      Integer num = abs(rational_num(c)), den = rational_den(c);
      if (num > h) h = num;
      if (den > h) h = den;
    }
    return h;
  };
  std::optional<FieldElement> best;
  Integer best_h = 0;
  for (auto g : gens) {
    if (g.sign() < 0) g = -g;
    Integer h = height(g);
    if (!best || h < best_h) {
      best = g;
      best_h = h;
    }
  }
  return best;
}

}  // namespace quasicut
