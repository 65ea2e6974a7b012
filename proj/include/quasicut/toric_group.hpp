#pragma once

#include "quasicut/intlinalg.hpp"

#include <vector>

namespace quasicut {

/**
 * A subgroup of the torus T^m = R^m/Z^m presented as (V + L + Z^m)/Z^m where
 * V is the real span of `continuous` and L the Z-span of `translates`. This is
 * the shape of the symmetry groups cut constructions produce: a connected
 * component plus countably many translates.
 */
struct ToricGroupData {
  std::size_t m = 0;
  Tower tower;
  std::vector<FieldVec> continuous;
  std::vector<FieldVec> translates;
};

namespace detail {

inline std::vector<FieldVec> annihilator_rows(const Tower& t, std::size_t m,
                                              const std::vector<FieldVec>& span) {
  if (span.empty()) {
    std::vector<FieldVec> id;
    for (std::size_t i = 0; i < m; ++i) {
      FieldVec e(m, t.zero());
      e[i] = t.one();
      id.push_back(std::move(e));
    }
    return id;
  }
  return kernel(FieldMat::from_rows(t, span));
}

}  // namespace detail

/** Does every element of `a` lie in `b`? */
inline bool toric_subgroup_of(const ToricGroupData& a, const ToricGroupData& b) {
  if (a.m != b.m) return false;
  Tower t;
  {
    std::vector<FieldVec> all;
    all.insert(all.end(), a.continuous.begin(), a.continuous.end());
    all.insert(all.end(), a.translates.begin(), a.translates.end());
    all.insert(all.end(), b.continuous.begin(), b.continuous.end());
    all.insert(all.end(), b.translates.begin(), b.translates.end());
    t = detail::common_tower(all);
  }
  auto emb = [&](const std::vector<FieldVec>& vs) {
    std::vector<FieldVec> out = vs;
    for (auto& v : out)
      for (auto& c : v) c = c.embed(t);
    return out;
  };
  std::vector<FieldVec> va = emb(a.continuous), vb = emb(b.continuous);
  std::vector<FieldVec> la = emb(a.translates), lb = emb(b.translates);

  // connected parts: span(va) inside span(vb)
  std::size_t rb = vb.empty() ? 0 : rank(FieldMat::from_rows(t, vb));
  {
    std::vector<FieldVec> joint = vb;
    joint.insert(joint.end(), va.begin(), va.end());
    std::size_t rj = joint.empty() ? 0 : rank(FieldMat::from_rows(t, joint));
    if (rj != rb) return false;
  }

  // translates: x in V_b + L_b + Z^m iff Kx lies in the Z-span of K applied to
  // L_b and the unit vectors, where K's rows annihilate V_b (since ker K = V_b).
  std::vector<FieldVec> k = detail::annihilator_rows(t, a.m, vb);
  auto project = [&](const FieldVec& x) {
    FieldVec out;
    out.reserve(k.size());
    for (const auto& row : k) out.push_back(dot(row, x));
    return out;
  };
  std::vector<FieldVec> span_gens;
  for (const auto& l : lb) span_gens.push_back(project(l));
  for (std::size_t j = 0; j < a.m; ++j) {
    FieldVec e(a.m, t.zero());
    e[j] = t.one();
    span_gens.push_back(project(e));
  }
  for (const auto& x : la)
    if (!z_span_contains(span_gens, project(x))) return false;
  return true;
}

inline bool toric_groups_equal(const ToricGroupData& a, const ToricGroupData& b) {
  return toric_subgroup_of(a, b) && toric_subgroup_of(b, a);
}

}  // namespace quasicut
