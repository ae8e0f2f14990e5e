#pragma once

#include <gmpxx.h>

#include <string>

namespace weylhc {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

// Sign used by the polynomial printer; 0 means "print in parentheses".
inline int display_sign(const Rational& x) { return sgn(x); }

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

// num/den in canonical form (the two-argument mpq_class constructor does not
// canonicalize, and GMP arithmetic requires canonical operands).
inline Rational fraction(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational abs_value(const Rational& x) { return abs(x); }

// Exact rational from a decimal/fraction string ("3", "-7/2").
inline Rational parse_rational(const std::string& s) {
  Rational r(s, 10);
  r.canonicalize();
  return r;
}

}  // namespace weylhc
