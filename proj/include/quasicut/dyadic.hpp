#pragma once

#include "quasicut/rational.hpp"

namespace quasicut {

/**
 * Closed interval with dyadic-rational endpoints.
 *
 * All decision procedures in the library (sign of a field element, vertex
 * feasibility, ...) run on these intervals with outward rounding; no floating
 * point is involved anywhere. Endpoints are stored as exact rationals whose
 * denominators are powers of two. Addition and multiplication of dyadics are
 * exact, so rounding happens only when converting a general rational to the
 * grid and when taking square roots.
 */
struct DyadicInterval {
  Rational lo;
  Rational hi;
  unsigned precision = 0;  // grid: endpoints are multiples of 2^-precision

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

namespace detail {

inline Rational dyadic_floor(const Rational& x, unsigned bits) {
  Integer scaled = floor_div(rational_num(x) << bits, rational_den(x));
  return Rational(scaled, pow2(bits));
}

inline Rational dyadic_ceil(const Rational& x, unsigned bits) {
  Integer scaled = ceil_div(rational_num(x) << bits, rational_den(x));
  return Rational(scaled, pow2(bits));
}

// Largest multiple of 2^-bits whose square is <= x (x >= 0).
inline Rational sqrt_lower(const Rational& x, unsigned bits) {
  Integer t = floor_div(rational_num(x) << (2 * bits), rational_den(x));
  if (t < 0) t = 0;
  return Rational(sqrt(t), pow2(bits));
}

// A multiple of 2^-bits whose square is >= x.
inline Rational sqrt_upper(const Rational& x, unsigned bits) {
  Integer t = ceil_div(rational_num(x) << (2 * bits), rational_den(x));
  if (t < 0) t = 0;
  Integer s = sqrt(t);
  if (s * s < t) ++s;
  return Rational(s, pow2(bits));
}

}  // namespace detail

inline DyadicInterval interval_of_rational(const Rational& x, unsigned bits) {
  return {detail::dyadic_floor(x, bits), detail::dyadic_ceil(x, bits), bits};
}

inline DyadicInterval interval_add(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi, std::min(a.precision, b.precision)};
}

inline DyadicInterval interval_neg(const DyadicInterval& a) {
  return {-a.hi, -a.lo, a.precision};
}

inline DyadicInterval interval_mul(const DyadicInterval& a, const DyadicInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi, std::min(a.precision, b.precision)};
}

/** Outward-rounded square root; the true radicand is assumed >= 0 even if the
 *  interval's lower bound dipped below zero from earlier rounding. */
inline DyadicInterval interval_sqrt(const DyadicInterval& a, unsigned bits) {
  Rational lo = a.lo < 0 ? Rational(0) : a.lo;
  return {detail::sqrt_lower(lo, bits), detail::sqrt_upper(a.hi, bits), bits};
}

}  // namespace quasicut
