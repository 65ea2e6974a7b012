#pragma once

#include "quasicut/dyadic.hpp"
#include "quasicut/rational.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace quasicut {

class FieldElement;

/**
 * A tower of real quadratic extensions Q = F_0 < F_1 < ... < F_k, where
 * F_i = F_{i-1}(sqrt(r_i)) and each radicand r_i is a positive element of
 * F_{i-1}. Elements of F_k are stored as 2^k rational coordinates in the
 * multiplicative basis of square-root products: basis index b corresponds to
 * the product of sqrt(r_{i+1}) over the set bits i of b.
 *
 * Towers are immutable values with shared storage. Validity (no radicand is a
 * square lower down) is not checked at construction; an invalid tower
 * surfaces as a zero-divisor error on the first inversion that hits it.
 */
class Tower {
 public:
  struct Level {
    std::vector<Rational> radicand;  // coordinates over the prefix tower
    std::string name;
  };

  Tower() : data_(std::make_shared<const Data>()) {}

  std::size_t depth() const { return data_->levels.size(); }
  std::size_t basis_size() const { return std::size_t(1) << depth(); }
  const Level& level(std::size_t i) const { return data_->levels[i]; }

  bool same_as(const Tower& o) const {
    if (data_ == o.data_) return true;
    return depth() == o.depth() && is_prefix_of(o);
  }

  bool is_prefix_of(const Tower& o) const {
    if (depth() > o.depth()) return false;
    for (std::size_t i = 0; i < depth(); ++i)
      if (data_->levels[i].radicand != o.data_->levels[i].radicand) return false;
    return true;
  }

  Tower prefix(std::size_t k) const {
    auto d = std::make_shared<Data>();
    d->levels.assign(data_->levels.begin(), data_->levels.begin() + k);
    return Tower(std::move(d));
  }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement rational(const Rational& r) const;
  FieldElement integer(long v) const;
  FieldElement element(std::vector<Rational> coeffs) const;
  /** The basis element sqrt(r_{i+1}) of level i (0-based). */
  FieldElement radical(std::size_t i) const;

  Tower adjoin_sqrt(const FieldElement& radicand, std::string name = {}) const;

 private:
  struct Data {
    std::vector<Level> levels;
  };
  explicit Tower(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;

  friend class FieldElement;
};

namespace detail {

inline std::vector<Rational> vec_add(const std::vector<Rational>& x,
                                     const std::vector<Rational>& y) {
  std::vector<Rational> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

inline bool vec_zero(const std::vector<Rational>& x) {
  for (const auto& c : x)
    if (c != 0) return false;
  return true;
}

// Product of two coordinate vectors over the first k levels of t.
inline std::vector<Rational> mul_rec(const Tower& t, std::size_t k,
                                     const std::vector<Rational>& x,
                                     const std::vector<Rational>& y) {
  if (k == 0) return {x[0] * y[0]};
  std::size_t h = std::size_t(1) << (k - 1);
  std::vector<Rational> a1(x.begin(), x.begin() + h), b1(x.begin() + h, x.end());
  std::vector<Rational> a2(y.begin(), y.begin() + h), b2(y.begin() + h, y.end());
  auto low = vec_add(mul_rec(t, k - 1, a1, a2),
                     mul_rec(t, k - 1, mul_rec(t, k - 1, b1, b2), t.level(k - 1).radicand));
  auto high = vec_add(mul_rec(t, k - 1, a1, b2), mul_rec(t, k - 1, b1, a2));
  low.insert(low.end(), high.begin(), high.end());
  return low;
}

// Inverse by iterated conjugation: (a + b s)^-1 = (a - b s) / (a^2 - b^2 r).
inline std::vector<Rational> inv_rec(const Tower& t, std::size_t k,
                                     const std::vector<Rational>& x) {
  if (k == 0) {
    if (x[0] == 0) throw FieldError("division by zero");
    return {1 / x[0]};
  }
  std::size_t h = std::size_t(1) << (k - 1);
  std::vector<Rational> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  auto norm = vec_add(mul_rec(t, k - 1, a, a),
                      [&] {
                        auto s = mul_rec(t, k - 1, mul_rec(t, k - 1, b, b),
                                         t.level(k - 1).radicand);
                        for (auto& c : s) c = -c;
                        return s;
                      }());
  if (vec_zero(norm)) {
    if (vec_zero(a) && vec_zero(b)) throw FieldError("division by zero");
    throw TowerError("zero divisor: radicand of level " + std::to_string(k) +
                     " is a square in the field below (invalid tower)");
  }
  auto ninv = inv_rec(t, k - 1, norm);
  auto low = mul_rec(t, k - 1, a, ninv);
  auto high = mul_rec(t, k - 1, b, ninv);
  for (auto& c : high) c = -c;
  low.insert(low.end(), high.begin(), high.end());
  return low;
}

inline DyadicInterval eval_rec(const Tower& t, std::size_t k,
                               const std::vector<Rational>& x, unsigned bits) {
  if (k == 0) return interval_of_rational(x[0], bits);
  std::size_t h = std::size_t(1) << (k - 1);
  std::vector<Rational> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  DyadicInterval ia = eval_rec(t, k - 1, a, bits);
  if (vec_zero(b)) return ia;
  DyadicInterval ib = eval_rec(t, k - 1, b, bits);
  DyadicInterval ir = eval_rec(t, k - 1, t.level(k - 1).radicand, bits);
  DyadicInterval is = interval_sqrt(ir, bits);
  return interval_add(ia, interval_mul(ib, is));
}

}  // namespace detail

/**
 * An element of the top field of a Tower. Value type; all arithmetic is exact.
 * Equality is coordinatewise, which coincides with equality of real numbers
 * whenever the tower is valid.
 */
class FieldElement {
 public:
  FieldElement() = default;

  const Tower& tower() const { return tower_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const { return detail::vec_zero(coeffs_); }
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }
  const Rational& rational_value() const {
    if (!is_rational()) throw FieldError("element is not rational");
    return coeffs_[0];
  }

  /** Lift into an extension tower that has this element's tower as a prefix. */
  FieldElement embed(const Tower& target) const {
    if (tower_.same_as(target)) return FieldElement(target, coeffs_);
    if (!tower_.is_prefix_of(target))
      throw TowerError("cannot embed element: towers are not prefix-compatible");
    std::vector<Rational> c(target.basis_size(), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    return FieldElement(target, std::move(c));
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = align(a, b);
    return FieldElement(x.tower_, detail::vec_add(x.coeffs_, y.coeffs_));
  }
  friend FieldElement operator-(const FieldElement& a) {
    auto c = a.coeffs_;
    for (auto& v : c) v = -v;
    return FieldElement(a.tower_, std::move(c));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a + (-b);
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = align(a, b);
    return FieldElement(x.tower_,
                        detail::mul_rec(x.tower_, x.tower_.depth(), x.coeffs_, y.coeffs_));
  }
  FieldElement inverse() const {
    return FieldElement(tower_, detail::inv_rec(tower_, tower_.depth(), coeffs_));
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }
  friend FieldElement operator*(const Rational& r, const FieldElement& a) {
    auto c = a.coeffs_;
    for (auto& v : c) v *= r;
    return FieldElement(a.tower_, std::move(c));
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = align(a, b);
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /**
   * Exact sign: -1, 0, +1. Zero is decided syntactically; otherwise the
   * element is evaluated in interval arithmetic with doubling precision until
   * the interval excludes zero.
   */
  int sign() const {
    if (is_zero()) return 0;
    for (unsigned bits = 32; bits <= 65536; bits *= 2) {
      DyadicInterval i = detail::eval_rec(tower_, tower_.depth(), coeffs_, bits);
      if (i.lo > 0) return 1;
      if (i.hi < 0) return -1;
    }
    throw FieldError(
        "sign: interval refinement exceeded 65536 bits; "
        "a tower radicand is likely a perfect square");
  }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  /**
   * Enclosing interval of width at most 2^(1-bits) * max(1, |x|), computed by
   * outward-rounded evaluation with precision doubling.
   */
  DyadicInterval approximate(unsigned bits) const {
    for (unsigned w = bits + 16;; w *= 2) {
      DyadicInterval i = detail::eval_rec(tower_, tower_.depth(), coeffs_, w);
      Rational lower_abs =
          i.contains_zero() ? Rational(0)
                            : std::min(abs(i.lo), abs(i.hi));
      Rational bound = Rational(2) / Rational(pow2(bits));
      if (lower_abs > 1) bound *= lower_abs;
      if (i.width() <= bound) {
        i.precision = bits;
        return i;
      }
    }
  }

 private:
  FieldElement(Tower t, std::vector<Rational> c)
      : tower_(std::move(t)), coeffs_(std::move(c)) {}

  static std::pair<FieldElement, FieldElement> align(const FieldElement& a,
                                                     const FieldElement& b) {
    if (a.tower_.same_as(b.tower_)) return {a, b};
    if (a.tower_.is_prefix_of(b.tower_)) return {a.embed(b.tower_), b};
    if (b.tower_.is_prefix_of(a.tower_)) return {a, b.embed(a.tower_)};
    throw TowerError("elements belong to incompatible towers");
  }

  Tower tower_;
  std::vector<Rational> coeffs_;

  friend class Tower;
};

inline FieldElement Tower::zero() const {
  return element(std::vector<Rational>(basis_size(), Rational(0)));
}
inline FieldElement Tower::one() const { return rational(Rational(1)); }
inline FieldElement Tower::rational(const Rational& r) const {
  std::vector<Rational> c(basis_size(), Rational(0));
  c[0] = r;
  return element(std::move(c));
}
inline FieldElement Tower::integer(long v) const { return rational(Rational(v)); }
inline FieldElement Tower::element(std::vector<Rational> coeffs) const {
  if (coeffs.size() != basis_size())
    throw FieldError("coefficient vector size does not match tower basis");
  return FieldElement(*this, std::move(coeffs));
}
inline FieldElement Tower::radical(std::size_t i) const {
  std::vector<Rational> c(basis_size(), Rational(0));
  c[std::size_t(1) << i] = 1;
  return element(std::move(c));
}

inline Tower Tower::adjoin_sqrt(const FieldElement& radicand, std::string name) const {
  FieldElement r = radicand.embed(*this);
  if (r.sign() <= 0) throw TowerError("adjoin_sqrt: radicand must be positive");
  auto d = std::make_shared<Data>();
  d->levels = data_->levels;
  if (name.empty()) name = "r" + std::to_string(depth() + 1);
  for (const auto& lv : d->levels)
    if (lv.name == name) throw TowerError("adjoin_sqrt: duplicate level name " + name);
  d->levels.push_back(Level{r.coeffs(), std::move(name)});
  return Tower(std::move(d));
}

/** Three-way exact comparison of field elements. */
inline int compare(const FieldElement& a, const FieldElement& b) {
  return (a - b).sign();
}

namespace detail {
/** Deterministic (syntactic) ordering on coordinate vectors, for dedup/sorting. */
inline bool lex_less(const FieldElement& a, const FieldElement& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return x.size() < y.size();
}
}  // namespace detail

}  // namespace quasicut
