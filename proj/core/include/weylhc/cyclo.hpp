#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylhc/cyclotomic_field.hpp"
#include "weylhc/laurent.hpp"
#include "weylhc/rational.hpp"

namespace weylhc {

// Phi_n(q) as an exact polynomial (monic, integer coefficients, degree phi(n)).
Poly cyclotomic(int n);

// c * q^k * prod Phi_d(q)^e_d.
struct CyclotomicProduct {
  Rational scalar{1};
  int q_power = 0;
  std::map<int, int> factors;  // d -> multiplicity, all multiplicities > 0

  Poly expand() const;
  CyclotomicProduct& operator*=(const CyclotomicProduct& o);
  friend CyclotomicProduct operator*(CyclotomicProduct a, const CyclotomicProduct& b) {
    return a *= b;
  }
  friend bool operator==(const CyclotomicProduct& a, const CyclotomicProduct& b) {
    return a.scalar == b.scalar && a.q_power == b.q_power && a.factors == b.factors;
  }

  // "2 · q^-3 · Φ3(q)^1 · Φ12(q)^1"
  std::string to_string() const;
  // Typeset form, e.g. "3Φ₆(q)" or "Φ₃(q)Φ₆(q)²".
  std::string to_unicode() const;
};

// Phi_n(q^m) written as a product of cyclotomic polynomials in q.  m == 0
// yields the scalar Phi_n(1).
CyclotomicProduct factor_cyclotomic_substitution(int n, int m);

// Writes p as c * q^k * prod Phi_d(q)^e, or nullopt when p has a factor that
// is not cyclotomic.
std::optional<CyclotomicProduct> factor_into_cyclotomics(const Poly& p);

// Phi_n(q) evaluated at an integer.
Integer cyclotomic_value(int n, const Integer& q);

// Prime factorization (ascending, with multiplicity) by trial division and
// Pollard-Brent rho.  n >= 1.
std::vector<Integer> prime_factors(Integer n);
bool is_probable_prime(const Integer& n);

// The classical exceptions (q, n) for which q^n - 1 has no primitive prime
// divisor: n = 1 with q = 2, n = 2 with q + 1 a power of two, (2, 6).
bool zsigmondy_exception(long q, int n);

// Smallest primitive prime divisor of q^n - 1 (a prime dividing Phi_n(q)
// and no Phi_m(q) with m < n), or nullopt in the exception cases.
std::optional<Integer> zsigmondy(long q, int n);

}  // namespace weylhc
