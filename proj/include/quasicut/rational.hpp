#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace quasicut {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/** Base class for everything this library throws. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Arithmetic failures inside the quadratic tower (division by zero, sign refinement cap). */
class FieldError : public Error {
 public:
  explicit FieldError(const std::string& what) : Error(what) {}
};

/** A tower turned out to be invalid: some radicand is a square in the field below it. */
class TowerError : public Error {
 public:
  explicit TowerError(const std::string& what) : Error(what) {}
};

/** Structural failures of polyhedra or presentations (empty, low-dimensional, ...). */
class GeometryError : public Error {
 public:
  explicit GeometryError(const std::string& what) : Error(what) {}
};

/** Membership / group-theoretic failures (vector not in quasilattice, bad quotient). */
class LatticeError : public Error {
 public:
  explicit LatticeError(const std::string& what) : Error(what) {}
};

/** Invalid cut or blow-up data (assumption violations, inadmissible centers). */
class CutError : public Error {
 public:
  explicit CutError(const std::string& what) : Error(what) {}
};

/** Input text could not be parsed. */
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

inline Integer floor_div(const Integer& a, const Integer& b) {
  // b > 0 assumed
  Integer q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

inline Integer pow2(unsigned bits) {
  Integer r = 1;
  r <<= bits;
  return r;
}

}  // namespace quasicut
