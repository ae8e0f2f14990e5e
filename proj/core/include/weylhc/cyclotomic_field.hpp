#pragma once

#include <complex>
#include <compare>
#include <string>
#include <vector>

#include "weylhc/rational.hpp"

namespace weylhc {

// An element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, zeta, ..., zeta^(phi(N)-1) modulo Phi_N.  Rational values are always
// stored with conductor 1.  Arithmetic between different conductors embeds
// both operands into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  Cyclotomic(long v) : n_(1), c_{Rational(v)} {}                  // NOLINT
  Cyclotomic(const Rational& v) : n_(1), c_{v} { c_[0].canonicalize(); }  // NOLINT
  Cyclotomic(const Integer& v) : n_(1), c_{Rational(v)} {}        // NOLINT

  // zeta_n^k.
  static Cyclotomic zeta(int n, long k = 1);
  // zeta_n^k + zeta_n^-k = 2cos(2 pi k / n).
  static Cyclotomic two_cos(int n, long k = 1);
  // From power-basis coordinates in Q(zeta_n); reduces mod Phi_n.
  static Cyclotomic from_coefficients(int n, const std::vector<Rational>& coeffs);

  int conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }
  bool is_rational() const { return n_ == 1; }
  // Throws DomainError unless rational.
  const Rational& rational() const;
  bool is_integral() const;  // all power-basis coordinates are integers

  // Power-basis coordinates of this value in Q(zeta_m), conductor() | m.
  std::vector<Rational> coordinates_in(int m) const;
  // Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
  Cyclotomic galois(long a) const;
  Cyclotomic conj() const { return galois(-1); }
  bool is_real() const { return *this == conj(); }

  Cyclotomic inverse() const;

  std::complex<double> to_complex() const;
  double real_value() const { return to_complex().real(); }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Exact "c(n)" form for real values, where c(n) = 2cos(2 pi / n); GAP-style
  // E(n)^k sums otherwise.
  std::string to_string() const;

 private:
  Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void reduce_from(int n, std::vector<Rational> poly);
  void normalize();

  int n_;
  std::vector<Rational> c_;
};

// Total order used for deterministic tie-breaking: exact equality first,
// then numerical comparison of (real, imaginary) parts.
std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b);

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_one(const Cyclotomic& x) { return x.is_rational() && x.rational() == 1; }
inline int display_sign(const Cyclotomic& x) { return x.is_rational() ? sgn(x.rational()) : 0; }
inline std::string to_string(const Cyclotomic& x) { return x.to_string(); }

int euler_phi(int n);
// Integer coefficients of Phi_n, lowest degree first (cached).
const std::vector<long>& cyclotomic_coefficients(int n);

}  // namespace weylhc
