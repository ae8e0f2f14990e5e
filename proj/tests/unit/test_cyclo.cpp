#include "doctest.h"

#include "oracles.hpp"
#include "weylhc/cyclo.hpp"
#include "weylhc/error.hpp"

using namespace weylhc;

namespace {

Poly poly(std::initializer_list<std::pair<int, long>> terms) {
  Poly p;
  for (const auto& [e, c] : terms) p += Poly::monomial(Rational(c), e);
  return p;
}

Poly divisor_product(int n) {
  Poly p(1L);
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) p = p * cyclotomic(d);
  return p;
}

Integer ipow(long q, int n) {
  Integer r(1);
  for (int i = 0; i < n; ++i) r *= q;
  return r;
}

}  // namespace

TEST_CASE("cyclotomic field arithmetic") {
  for (int n : {1, 2, 3, 5, 8, 12, 15, 20}) {
    CAPTURE(n);
    const Cyclotomic z = Cyclotomic::zeta(n);
    Cyclotomic p(1);
    for (int k = 0; k < n; ++k) p *= z;
    CHECK(p == Cyclotomic(1));
    Cyclotomic sum(0);
    for (int k = 0; k < n; ++k) sum += Cyclotomic::zeta(n, k);
    CHECK(sum == Cyclotomic(n == 1 ? 1 : 0));
    CHECK(z * z.inverse() == Cyclotomic(1));
    CHECK(z.conj() == Cyclotomic::zeta(n, -1));
  }
  // 2cos(2pi/5) = (sqrt5 - 1)/2 satisfies x^2 + x - 1 = 0.
  const Cyclotomic t = Cyclotomic::two_cos(5);
  CHECK(t * t + t - Cyclotomic(1) == Cyclotomic(0));
  CHECK(t.is_real());
  CHECK(!t.is_rational());
  CHECK(std::abs(t.real_value() - 0.6180339887498949) < 1e-12);
  // Elements of a subfield compare equal across conductors.
  CHECK(Cyclotomic::zeta(6, 2) == Cyclotomic::zeta(3));
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(8) + Cyclotomic::zeta(8, -1) == Cyclotomic::two_cos(8));
  CHECK((Cyclotomic::two_cos(8) * Cyclotomic::two_cos(8)) == Cyclotomic(2));
  // Rationals built from unreduced fractions behave canonically.
  CHECK(Cyclotomic(Rational(4, 6)) == Cyclotomic(fraction(2, 3)));
  CHECK(fraction(12, 8) == Rational(3, 2));
  CHECK((Cyclotomic(Rational(2, 4)) * Cyclotomic(2)) == Cyclotomic(1));
  CHECK(Cyclotomic::zeta(5).galois(2) == Cyclotomic::zeta(5, 2));
  CHECK(Cyclotomic::zeta(5, 2).is_integral());
  CHECK(!Cyclotomic(fraction(1, 2)).is_integral());
}

TEST_CASE("laurent polynomials") {
  const Poly q = Poly::q();
  const Poly p = q * q - Poly(1L);
  CHECK(p.to_string() == "q^2 - 1");
  CHECK(cyclotomic(12).to_string() == "q^4 - q^2 + 1");
  CHECK((Poly::q(-1) * (q + Poly(1L))).to_string() == "1 + q^-1");
  CHECK(p.exact_div(q - Poly(1L)) == q + Poly(1L));
  CHECK(!p.exact_div(q * q + Poly(1L)));
  CHECK(p.evaluate(Rational(3)) == 8);
  CHECK((q + Poly(1L)).pow(3) == poly({{3, 1}, {2, 3}, {1, 3}, {0, 1}}));
  CHECK(Poly::q(-2).valuation() == -2);
  CHECK((p - p).is_zero());
  CHECK(cyclotomic(3).substitute_power(2) == poly({{4, 1}, {2, 1}, {0, 1}}));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(6) == poly({{2, 1}, {1, -1}, {0, 1}}));
  CHECK(cyclotomic(3) == poly({{2, 1}, {1, 1}, {0, 1}}));
  CHECK(cyclotomic(12) == poly({{4, 1}, {2, -1}, {0, 1}}));
  for (int n = 1; n <= 200; ++n) {
    CAPTURE(n);
    const Poly phi = cyclotomic(n);
    CHECK(phi.degree() == euler_phi(n));
    CHECK(phi.leading_coeff() == 1);
    for (const auto& [e, c] : phi.terms()) CHECK(c.get_den() == 1);
    CHECK(divisor_product(n) == Poly::q(n) - Poly(1L));
  }
  CHECK_THROWS_AS(cyclotomic(0), DomainError);
}

TEST_CASE("cyclotomic substitution") {
  const auto a = factor_cyclotomic_substitution(3, 2);
  CHECK(a.factors == std::map<int, int>{{3, 1}, {6, 1}});
  CHECK(a.scalar == 1);
  CHECK(factor_cyclotomic_substitution(6, 2).factors == std::map<int, int>{{12, 1}});
  const auto z = factor_cyclotomic_substitution(3, 0);
  CHECK(z.factors.empty());
  CHECK(z.scalar == 3);
  for (int n = 1; n <= 120; ++n)
    for (int m = 1; n * m <= 120; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(factor_cyclotomic_substitution(n, m).expand() == cyclotomic(n).substitute_power(m));
    }
  CyclotomicProduct c;
  c.scalar = 2;
  c.q_power = -3;
  c.factors = {{3, 1}, {6, 2}};
  CHECK(c.to_string() == "2 · q^-3 · Φ3(q)^1 · Φ6(q)^2");
  CHECK(c.to_unicode() == "2q⁻³Φ₃(q)Φ₆(q)²");
  const auto f = factor_into_cyclotomics(c.expand());
  REQUIRE(f);
  CHECK(*f == c);
  CHECK(!factor_into_cyclotomics(Poly::q(2) - Poly(2L)));
}

TEST_CASE("prime factorization") {
  CHECK(prime_factors(Integer(360)) == std::vector<Integer>{2, 2, 2, 3, 3, 5});
  CHECK(prime_factors(Integer(1)).empty());
  const Integer big = Integer("1000000007") * Integer("998244353");
  CHECK(prime_factors(big) == std::vector<Integer>{Integer("998244353"), Integer("1000000007")});
  CHECK(is_probable_prime(Integer("2305843009213693951")));
  CHECK(!is_probable_prime(Integer("2305843009213693953")));
}

TEST_CASE("zsigmondy examples") {
  CHECK(!zsigmondy(2, 6));
  CHECK(zsigmondy(2, 12) == Integer(13));
  CHECK(!zsigmondy(3, 2));
  CHECK(!zsigmondy(2, 1));
  CHECK(zsigmondy(3, 1) == Integer(2));
  CHECK(zsigmondy(2, 3) == Integer(7));
  CHECK(cyclotomic_value(12, Integer(2)) == 13);
  CHECK(cyclotomic_value(6, Integer(2)) == 3);
  CHECK(zsigmondy_exception(7, 2));
  CHECK(!zsigmondy_exception(5, 2));
}

TEST_CASE("zsigmondy agrees with gcd stripping") {
  for (long q = 2; q <= 20; ++q)
    for (int n = 1; n <= 30; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      const Integer part = oracle::primitive_part(q, n);
      const auto r = zsigmondy(q, n);
      CHECK(r.has_value() == (part > 1));
      CHECK(zsigmondy_exception(q, n) == (part == 1));
      if (!r) continue;
      CHECK(is_probable_prime(*r));
      CHECK(part % *r == 0);
      CHECK(cyclotomic_value(n, Integer(q)) % *r == 0);
      for (int m = 1; m < n; ++m) CHECK((ipow(q, m) - 1) % *r != 0);
      if (n >= 2) CHECK(*r % n == 1);
      // No smaller primitive prime exists.
      const long small = oracle::small_prime_factor(part, 100000);
      if (small != 0) CHECK(*r == small);
      else CHECK(*r >= 100000);
    }
}
