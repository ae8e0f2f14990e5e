#include <gmpxx.h>

#include "oracles.hpp"

namespace oracle {

using weylhc::Integer;

Integer primitive_part(long q, int n) {
  Integer qq(q), qn;
  mpz_pow_ui(qn.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(n));
  Integer rest = qn - 1;
  for (int m = 1; m < n; ++m) {
    Integer qm;
    mpz_pow_ui(qm.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(m));
    qm -= 1;
    Integer g = gcd(rest, qm);
    while (g > 1) {
      rest /= g;
      g = gcd(rest, g);
    }
  }
  return rest;
}

long small_prime_factor(const Integer& n, long limit) {
  for (long p = 2; p < limit; ++p)
    if (n % p == 0) return p;
  return 0;
}

}  // namespace oracle
