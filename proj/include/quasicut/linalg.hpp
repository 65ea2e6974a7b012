#pragma once

#include "quasicut/field.hpp"

#include <optional>
#include <vector>

namespace quasicut {

using FieldVec = std::vector<FieldElement>;

inline FieldVec field_vec(const Tower& t, std::initializer_list<Rational> vals) {
  FieldVec v;
  for (const auto& r : vals) v.push_back(t.rational(r));
  return v;
}

inline FieldElement dot(const FieldVec& a, const FieldVec& b) {
  FieldElement s = a.at(0).tower().zero();
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

inline FieldVec vec_add(const FieldVec& a, const FieldVec& b) {
  FieldVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline FieldVec vec_sub(const FieldVec& a, const FieldVec& b) {
  FieldVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline FieldVec vec_scale(const FieldElement& c, const FieldVec& a) {
  FieldVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline FieldVec vec_neg(const FieldVec& a) {
  FieldVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool vec_is_zero(const FieldVec& a) {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

/** Dense matrix over a field tower. Row-major; tiny sizes only. */
class FieldMat {
 public:
  FieldMat() = default;
  FieldMat(Tower t, std::size_t rows, std::size_t cols)
      : tower_(std::move(t)), rows_(rows), cols_(cols),
        a_(rows * cols, tower_.zero()) {}

  static FieldMat identity(const Tower& t, std::size_t n) {
    FieldMat m(t, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = t.one();
    return m;
  }
  static FieldMat from_rows(const Tower& t, const std::vector<FieldVec>& rows) {
    FieldMat m(t, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    return m;
  }
  static FieldMat from_cols(const Tower& t, const std::vector<FieldVec>& cols) {
    FieldMat m(t, cols.empty() ? 0 : cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    return m;
  }

  const Tower& tower() const { return tower_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  FieldVec row(std::size_t r) const {
    return FieldVec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }
  FieldVec col(std::size_t c) const {
    FieldVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
  }

  friend bool operator==(const FieldMat& a, const FieldMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Tower tower_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> a_;
};

/**
 * In-place reduced row echelon form (pivots 1, pivot columns cleared).
 * Returns the pivot column of each pivot row. Pivot choice is the first
 * nonzero entry in column order, so the result is canonical for the row space.
 */
inline std::vector<std::size_t> rref(FieldMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    FieldElement inv = m.at(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      FieldElement f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(FieldMat m) { return rref(m).size(); }

/** Solve A x = b for square invertible A; nullopt when A is singular. */
inline std::optional<FieldVec> solve(const FieldMat& a, const FieldVec& b) {
  FieldMat aug(a.tower(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (piv.size() != a.cols()) return std::nullopt;
  for (std::size_t k = 0; k < piv.size(); ++k)
    if (piv[k] >= a.cols()) return std::nullopt;
  FieldVec x(a.cols(), a.tower().zero());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at(k, a.cols());
  return x;
}

inline std::optional<FieldMat> inverse(const FieldMat& a) {
  FieldMat aug(a.tower(), a.rows(), 2 * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols() + i) = a.tower().one();
  }
  auto piv = rref(aug);
  if (piv.size() != a.rows()) return std::nullopt;
  for (std::size_t k = 0; k < piv.size(); ++k)
    if (piv[k] >= a.cols()) return std::nullopt;
  FieldMat inv(a.tower(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) inv.at(i, j) = aug.at(i, a.cols() + j);
  return inv;
}

/** Basis of {x : A x = 0}. */
inline std::vector<FieldVec> kernel(const FieldMat& a) {
  FieldMat m = a;
  auto piv = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<FieldVec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FieldVec v(a.cols(), a.tower().zero());
    v[free] = a.tower().one();
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline FieldMat mat_mul(const FieldMat& a, const FieldMat& b) {
  FieldMat r(a.tower(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FieldElement s = a.tower().zero();
      for (std::size_t k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

inline FieldVec mat_apply(const FieldMat& a, const FieldVec& x) {
  FieldVec r(a.rows(), a.tower().zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    FieldElement s = a.tower().zero();
    for (std::size_t k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * x[k];
    r[i] = s;
  }
  return r;
}

inline FieldMat transpose(const FieldMat& a) {
  FieldMat r(a.tower(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

}  // namespace quasicut
