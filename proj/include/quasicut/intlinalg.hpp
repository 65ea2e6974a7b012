#pragma once

#include "quasicut/linalg.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace quasicut {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;  // row-major

namespace detail {

// g = gcd(a,b) >= 0 together with x a + y b = g. When a divides b the result
// is (|a|, sign(a), 0): elimination callers rely on the divisible case being
// an identity-shaped operation (otherwise alternating row/column sweeps can
// reintroduce the entries they just cleared and never settle).
inline std::tuple<Integer, Integer, Integer> egcd(Integer a, Integer b) {
  if (b == 0) return {abs(a), a >= 0 ? (a == 0 ? 0 : 1) : -1, 0};
  if (a != 0 && b % a == 0) return {abs(a), a > 0 ? 1 : -1, 0};
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Integer q = a / b;  // truncated; any consistent quotient works here
    Integer r = a - q * b;
    a = b; b = r;
    Integer nx = x0 - q * x1, ny = y0 - q * y1;
    x0 = x1; y0 = y1; x1 = nx; y1 = ny;
  }
  if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
  return {a, x0, y0};
}

}  // namespace detail

struct ColumnHermite {
  IntMat h;  // column echelon form, h = a * u
  IntMat u;  // unimodular
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

/** Column-style Hermite normal form via unimodular column operations. */
inline ColumnHermite hnf_cols(const IntMat& a) {
  std::size_t m = a.size(), q = m ? a[0].size() : 0;
  ColumnHermite res;
  res.h = a;
  res.u.assign(q, IntVec(q, 0));
  for (std::size_t i = 0; i < q; ++i) res.u[i][i] = 1;
  auto col_op = [&](IntMat& mat, std::size_t c1, std::size_t c2, const Integer& x,
                    const Integer& y, const Integer& z, const Integer& w) {
    // (col c1, col c2) <- (x col1 + y col2, z col1 + w col2)
    for (auto& row : mat) {
      Integer n1 = x * row[c1] + y * row[c2];
      Integer n2 = z * row[c1] + w * row[c2];
      row[c1] = n1; row[c2] = n2;
    }
  };
  auto swap_cols = [&](IntMat& mat, std::size_t c1, std::size_t c2) {
    for (auto& row : mat) std::swap(row[c1], row[c2]);
  };
  auto axpy_col = [&](IntMat& mat, std::size_t dst, std::size_t src, const Integer& f) {
    for (auto& row : mat) row[dst] += f * row[src];
  };

  std::size_t c = 0;
  for (std::size_t i = 0; i < m && c < q; ++i) {
    std::size_t j = c;
    while (j < q && res.h[i][j] == 0) ++j;
    if (j == q) continue;
    if (j != c) { swap_cols(res.h, c, j); swap_cols(res.u, c, j); }
    for (j = c + 1; j < q; ++j) {
      if (res.h[i][j] == 0) continue;
      auto [g, x, y] = detail::egcd(res.h[i][c], res.h[i][j]);
      Integer p = res.h[i][c] / g, s = res.h[i][j] / g;
      col_op(res.h, c, j, x, y, -s, p);
      col_op(res.u, c, j, x, y, -s, p);
    }
    if (res.h[i][c] < 0) {
      for (auto& row : res.h) row[c] = -row[c];
      for (auto& row : res.u) row[c] = -row[c];
    }
    for (j = 0; j < c; ++j) {
      Integer f = -floor_div(res.h[i][j], res.h[i][c]);
      if (f != 0) { axpy_col(res.h, j, c, f); axpy_col(res.u, j, c, f); }
    }
    res.pivots.emplace_back(i, c);
    ++c;
  }
  return res;
}

/** Basis of the integer kernel {x : A x = 0}. */
inline IntMat integer_kernel(const IntMat& a) {
  std::size_t q = a.empty() ? 0 : a[0].size();
  auto ch = hnf_cols(a);
  IntMat basis;
  for (std::size_t j = ch.pivots.size(); j < q; ++j) {
    IntVec v(q);
    for (std::size_t i = 0; i < q; ++i) v[i] = ch.u[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

/** One integer solution of A x = b, or nullopt. */
inline std::optional<IntVec> integer_solve(const IntMat& a, const IntVec& b) {
  std::size_t m = a.size(), q = m ? a[0].size() : 0;
  auto ch = hnf_cols(a);
  IntVec y(q, 0), r = b;
  for (auto [pi, pc] : ch.pivots) {
    if (r[pi] % ch.h[pi][pc] != 0) return std::nullopt;
    y[pc] = r[pi] / ch.h[pi][pc];
    if (y[pc] != 0)
      for (std::size_t i = 0; i < m; ++i) r[i] -= y[pc] * ch.h[i][pc];
  }
  for (const auto& v : r)
    if (v != 0) return std::nullopt;
  IntVec x(q, 0);
  for (std::size_t i = 0; i < q; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < q; ++j) s += ch.u[i][j] * y[j];
    x[i] = s;
  }
  return x;
}

/** Canonical row-style Hermite normal form; returns the nonzero rows. */
inline IntMat hnf_rows(const IntMat& a) {
  IntMat h = a;
  std::size_t m = h.size(), n = m ? h[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && h[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(h[p], h[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      while (h[i][c] != 0) {
        auto [g, x, y] = detail::egcd(h[r][c], h[i][c]);
        Integer pr = h[r][c] / g, s = h[i][c] / g;
        for (std::size_t j = 0; j < n; ++j) {
          Integer nr = x * h[r][j] + y * h[i][j];
          Integer ni = -s * h[r][j] + pr * h[i][j];
          h[r][j] = nr; h[i][j] = ni;
        }
      }
    }
    if (h[r][c] < 0)
      for (std::size_t j = 0; j < n; ++j) h[r][j] = -h[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Integer f = floor_div(h[i][c], h[r][c]);
      if (f != 0)
        for (std::size_t j = 0; j < n; ++j) h[i][j] -= f * h[r][j];
    }
    ++r;
  }
  h.resize(r);
  return h;
}

/** Invariant factors (positive, each dividing the next) of an integer matrix. */
inline std::vector<Integer> smith_invariants(IntMat m) {
  std::vector<Integer> factors;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (true) {
    // find a nonzero entry in the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (m[i][j] != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        clean = false;
        auto [g, x, y] = detail::egcd(m[t][t], m[i][t]);
        Integer p = m[t][t] / g, s = m[i][t] / g;
        for (std::size_t j = t; j < cols; ++j) {
          Integer nt = x * m[t][j] + y * m[i][j];
          Integer ni = -s * m[t][j] + p * m[i][j];
          m[t][j] = nt; m[i][j] = ni;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        clean = false;
        auto [g, x, y] = detail::egcd(m[t][t], m[t][j]);
        Integer p = m[t][t] / g, s = m[t][j] / g;
        for (std::size_t i = t; i < rows; ++i) {
          Integer nt = x * m[i][t] + y * m[i][j];
          Integer nj = -s * m[i][t] + p * m[i][j];
          m[i][t] = nt; m[i][j] = nj;
        }
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols && divisible; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            divisible = false;
          }
      if (divisible) break;
    }
    if (m[t][t] < 0) m[t][t] = -m[t][t];
    factors.push_back(m[t][t]);
    ++t;
    if (t >= rows || t >= cols) break;
  }
  return factors;
}

// ---- field-coefficient systems -------------------------------------------
//
// A Z-linear condition on field vectors expands into one rational equation per
// (ambient coordinate, tower basis index) pair; clearing denominators row by
// row turns the whole thing into an integer system.

namespace detail {

inline Tower common_tower(const std::vector<FieldVec>& gens, const FieldVec* extra = nullptr) {
  Tower t;
  auto consider = [&](const FieldElement& e) {
    if (t.is_prefix_of(e.tower())) {
      if (e.tower().depth() > t.depth()) t = e.tower();
    } else if (!e.tower().is_prefix_of(t)) {
      throw TowerError("vectors belong to incompatible towers");
    }
  };
  for (const auto& g : gens)
    for (const auto& e : g) consider(e);
  if (extra)
    for (const auto& e : *extra) consider(e);
  return t;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

}  // namespace detail

/**
 * Expand "sum_i x_i gens[i] = target (over Z)" into an integer system and
 * solve. Returns a witness combination or nullopt.
 */
inline std::optional<IntVec> z_solve(const std::vector<FieldVec>& gens,
                                     const FieldVec& target) {
  if (gens.empty()) {
    for (const auto& e : target)
      if (!e.is_zero()) return std::nullopt;
    return IntVec{};
  }
  Tower t = detail::common_tower(gens, &target);
  std::size_t n = target.size(), bs = t.basis_size();
  IntMat a;
  IntVec b;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < bs; ++k) {
      std::vector<Rational> row(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i)
        row[i] = gens[i][r].embed(t).coeff(k);
      Rational rhs = target[r].embed(t).coeff(k);
      Integer den = rational_den(rhs);
      for (const auto& v : row) den = detail::lcm_int(den, rational_den(v));
      IntVec irow(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i)
        irow[i] = rational_num(row[i]) * (den / rational_den(row[i]));
      a.push_back(std::move(irow));
      b.push_back(rational_num(rhs) * (den / rational_den(rhs)));
    }
  }
  return integer_solve(a, b);
}

/** Integer relations {m : sum_i m_i gens[i] = 0}. */
inline IntMat z_relations(const std::vector<FieldVec>& gens) {
  if (gens.empty()) return {};
  Tower t = detail::common_tower(gens, nullptr);
  std::size_t n = gens[0].size(), bs = t.basis_size();
  IntMat a;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < bs; ++k) {
      std::vector<Rational> row(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i)
        row[i] = gens[i][r].embed(t).coeff(k);
      Integer den = 1;
      for (const auto& v : row) den = detail::lcm_int(den, rational_den(v));
      IntVec irow(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i)
        irow[i] = rational_num(row[i]) * (den / rational_den(row[i]));
      a.push_back(std::move(irow));
    }
  }
  if (a.empty()) {  // no coordinates: everything is a relation
    IntMat id;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      IntVec e(gens.size(), 0);
      e[i] = 1;
      id.push_back(std::move(e));
    }
    return id;
  }
  return integer_kernel(a);
}

/**
 * Canonical basis of the Z-span of a family of field vectors: flatten to
 * rational rows, clear one global denominator, take the row Hermite form and
 * scale back. Two families span the same subgroup iff the results are equal.
 */
inline std::vector<FieldVec> z_span_basis(const std::vector<FieldVec>& gens) {
  if (gens.empty()) return {};
  Tower t = detail::common_tower(gens, nullptr);
  std::size_t n = gens[0].size(), bs = t.basis_size();
  Integer den = 1;
  for (const auto& g : gens)
    for (const auto& e : g) {
      FieldElement ee = e.embed(t);
      for (const auto& c : ee.coeffs()) den = detail::lcm_int(den, rational_den(c));
    }
  IntMat m;
  for (const auto& g : gens) {
    IntVec row;
    row.reserve(n * bs);
    for (const auto& e : g) {
      FieldElement ee = e.embed(t);
      for (const auto& c : ee.coeffs())
        row.push_back(rational_num(c) * (den / rational_den(c)));
    }
    m.push_back(std::move(row));
  }
  IntMat h = hnf_rows(m);
  std::vector<FieldVec> basis;
  for (const auto& row : h) {
    FieldVec v;
    v.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Rational> coeffs(bs);
      for (std::size_t k = 0; k < bs; ++k)
        coeffs[k] = Rational(row[r * bs + k], den);
      v.push_back(t.element(std::move(coeffs)));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/** Does the Z-span of gens contain target? */
inline bool z_span_contains(const std::vector<FieldVec>& gens, const FieldVec& target) {
  return z_solve(gens, target).has_value();
}

/** Do two generator families span the same subgroup? */
inline bool z_span_equal(const std::vector<FieldVec>& a, const std::vector<FieldVec>& b) {
  auto ba = z_span_basis(a);
  auto bb = z_span_basis(b);
  if (ba.size() != bb.size()) return false;
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (std::size_t j = 0; j < ba[i].size(); ++j)
      if (!(ba[i][j] == bb[i][j])) return false;
  return true;
}

}  // namespace quasicut
