#include "weylhc/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weylhc/error.hpp"

namespace weylhc {

Poly cyclotomic(int n) {
  const std::vector<long>& c = cyclotomic_coefficients(n);
  Poly p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p.set(static_cast<int>(i), Rational(c[i]));
  return p;
}

Poly CyclotomicProduct::expand() const {
  Poly p = Poly::monomial(scalar, q_power);
  for (const auto& [d, e] : factors) p *= cyclotomic(d).pow(e);
  return p;
}

CyclotomicProduct& CyclotomicProduct::operator*=(const CyclotomicProduct& o) {
  scalar *= o.scalar;
  q_power += o.q_power;
  for (const auto& [d, e] : o.factors) factors[d] += e;
  if (sgn(scalar) == 0) {
    q_power = 0;
    factors.clear();
  }
  return *this;
}

std::string CyclotomicProduct::to_string() const {
  std::ostringstream os;
  os << weylhc::to_string(scalar);
  if (q_power != 0) os << " · q^" << q_power;
  for (const auto& [d, e] : factors) os << " · Φ" << d << "(q)^" << e;
  return os.str();
}

namespace {

std::string digits_with(int v, const char* const table[10], const char* minus) {
  std::string s;
  if (v < 0) {
    s += minus;
    v = -v;
  }
  for (char ch : std::to_string(v)) s += table[ch - '0'];
  return s;
}

const char* const kSub[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* const kSup[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

}  // namespace

std::string CyclotomicProduct::to_unicode() const {
  std::string s;
  const bool bare = factors.empty() && q_power == 0;
  if (scalar != 1 || bare) {
    if (scalar == -1 && !bare)
      s += "-";
    else
      s += weylhc::to_string(scalar);
  }
  if (q_power != 0) {
    s += "q";
    if (q_power != 1) s += digits_with(q_power, kSup, "⁻");
  }
  for (const auto& [d, e] : factors) {
    s += "Φ" + digits_with(d, kSub, "") + "(q)";
    if (e != 1) s += digits_with(e, kSup, "");
  }
  return s;
}

CyclotomicProduct factor_cyclotomic_substitution(int n, int m) {
  if (n < 1 || m < 0) throw DomainError("factor_cyclotomic_substitution: need n >= 1, m >= 0");
  CyclotomicProduct out;
  const Poly target = cyclotomic(n).substitute_power(m);
  if (m == 0) {
    out.scalar = target.coeff(0);
    return out;
  }
  // Only d | n*m can contribute; divide them out in increasing order.
  Poly rest = target;
  const int nm = n * m;
  for (int d = 1; d <= nm; ++d) {
    if (nm % d != 0) continue;
    const Poly phi = cyclotomic(d);
    while (!rest.is_constant()) {
      auto q = rest.exact_div(phi);
      if (!q) break;
      rest = std::move(*q);
      ++out.factors[d];
    }
  }
  if (!rest.is_constant())
    throw InternalError("Phi_n(q^m) did not split into cyclotomic factors");
  out.scalar = rest.coeff(0);
  if (out.expand() != target) throw InternalError("cyclotomic substitution factorization mismatch");
  return out;
}

std::optional<CyclotomicProduct> factor_into_cyclotomics(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  CyclotomicProduct out;
  out.q_power = p.valuation();
  Poly rest = p.shift(-out.q_power);
  // phi(d) >= sqrt(d/2), so no factor Phi_d with d > 2 deg^2 can divide.
  const int deg = rest.degree();
  const int limit = std::max(2, 2 * deg * deg + 2);
  for (int d = 1; d <= limit && !rest.is_constant(); ++d) {
    if (euler_phi(d) > rest.degree()) continue;
    const Poly phi = cyclotomic(d);
    while (!rest.is_constant()) {
      auto q = rest.exact_div(phi);
      if (!q) break;
      rest = std::move(*q);
      ++out.factors[d];
    }
  }
  if (!rest.is_constant()) return std::nullopt;
  out.scalar = rest.coeff(0);
  return out;
}

Integer cyclotomic_value(int n, const Integer& q) {
  const std::vector<long>& c = cyclotomic_coefficients(n);
  Integer v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * q + *it;
  return v;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

// Pollard-Brent; returns a nontrivial factor of composite odd n.  The inner
// loop works on raw mpz_t values to avoid temporaries.
Integer pollard_brent(const Integer& n) {
  const mpz_srcptr N = n.get_mpz_t();
  mpz_t x, y, ys, q, g, t;
  mpz_inits(x, y, ys, q, g, t, nullptr);
  auto step = [&](mpz_ptr v, unsigned long c) {
    mpz_mul(t, v, v);
    mpz_add_ui(t, t, c);
    mpz_mod(v, t, N);
  };
  Integer result;
  for (unsigned long c = 1; result == 0; ++c) {
    mpz_set_ui(y, 2);
    mpz_set_ui(q, 1);
    mpz_set_ui(g, 1);
    unsigned long r = 1;
    const unsigned long m = 256;
    do {
      mpz_set(x, y);
      for (unsigned long i = 0; i < r; ++i) step(y, c);
      unsigned long k = 0;
      do {
        mpz_set(ys, y);
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y, c);
          mpz_sub(t, x, y);
          mpz_mul(t, q, t);
          mpz_mod(q, t, N);
        }
        mpz_gcd(g, q, N);
        k += m;
      } while (k < r && mpz_cmp_ui(g, 1) == 0);
      r *= 2;
    } while (mpz_cmp_ui(g, 1) == 0);
    if (mpz_cmp(g, N) == 0) {
      do {
        step(ys, c);
        mpz_sub(t, x, ys);
        mpz_gcd(g, t, N);
      } while (mpz_cmp_ui(g, 1) == 0);
    }
    if (mpz_cmp(g, N) != 0) result = Integer(g);
  }
  mpz_clears(x, y, ys, q, g, t, nullptr);
  return result;
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  const Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Integer> prime_factors(Integer n) {
  if (n < 1) throw DomainError("prime_factors: n must be positive");
  std::vector<Integer> out;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (n == 1) break;
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool zsigmondy_exception(long q, int n) {
  if (n == 1) return q == 2;
  if (n == 2) {
    const long v = q + 1;
    return (v & (v - 1)) == 0;
  }
  return q == 2 && n == 6;
}

std::optional<Integer> zsigmondy(long q, int n) {
  if (q < 2 || n < 1) throw DomainError("zsigmondy: need q >= 2 and n >= 1");
  // A prime dividing Phi_n(q) but not n is primitive, and primitive primes
  // are 1 mod n.  Strip the primes of n, then search 1 mod n upwards.
  Integer rest = cyclotomic_value(n, Integer(q));
  for (int p = 2, m = n; m > 1; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) rest /= p;
  }
  std::optional<Integer> found;
  if (rest > 1) {
    if (is_probable_prime(rest)) {
      found = rest;
    } else {
      for (unsigned long r = n == 1 ? 2 : n + 1; r < 1000000 && Integer(r) * r <= rest; r += n) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), r)) {
          found = Integer(r);
          break;
        }
      }
      if (!found) found = prime_factors(rest).front();
    }
  }
  if (found.has_value() == zsigmondy_exception(q, n))
    throw InternalError("zsigmondy: factorization disagrees with the exception table at q=" +
                        std::to_string(q) + ", n=" + std::to_string(n));
  return found;
}

}  // namespace weylhc
