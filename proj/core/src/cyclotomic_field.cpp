#include "weylhc/cyclotomic_field.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>

#include "weylhc/error.hpp"
#include "weylhc/laurent.hpp"

namespace weylhc {

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& cyclotomic_coefficients(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  if (n < 1) throw DomainError("cyclotomic polynomial index must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& den = cyclotomic_coefficients(d);
    const int dd = static_cast<int>(den.size()) - 1;
    const int deg = static_cast<int>(num.size()) - 1;
    std::vector<long> quot(deg - dd + 1, 0);
    for (int k = deg; k >= dd; --k) {
      const long c = num[k];  // den is monic
      quot[k - dd] = c;
      if (c == 0) continue;
      for (int i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    num = std::move(quot);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

namespace {

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

long mod_pos(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Solve A x = b over Q (A has rows() >= cols(), consistent system assumed).
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a,
                                                    std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return std::nullopt;
  if (r < cols) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace

void Cyclotomic::reduce_from(int n, std::vector<Rational> poly) {
  const std::vector<long>& phi = cyclotomic_coefficients(n);
  const int d = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(poly.size()) - 1; k >= d; --k) {
    if (sgn(poly[k]) == 0) continue;
    const Rational c = poly[k];
    for (int i = 0; i <= d; ++i)
      if (phi[i] != 0) poly[k - d + i] -= c * phi[i];
  }
  poly.resize(d);
  n_ = n;
  c_ = std::move(poly);
  normalize();
}

void Cyclotomic::normalize() {
  if (n_ == 1) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return;
  Rational c0 = c_.empty() ? Rational(0) : c_[0];
  n_ = 1;
  c_.assign(1, c0);
}

Cyclotomic Cyclotomic::zeta(int n, long k) {
  if (n < 1) throw DomainError("zeta: order must be positive");
  std::vector<Rational> poly(static_cast<std::size_t>(mod_pos(k, n)) + 1);
  poly.back() = 1;
  Cyclotomic z;
  z.reduce_from(n, std::move(poly));
  return z;
}

Cyclotomic Cyclotomic::two_cos(int n, long k) { return zeta(n, k) + zeta(n, -k); }

Cyclotomic Cyclotomic::from_coefficients(int n, const std::vector<Rational>& coeffs) {
  Cyclotomic z;
  z.reduce_from(n, coeffs);
  return z;
}

const Rational& Cyclotomic::rational() const {
  if (n_ != 1) throw DomainError("cyclotomic number is not rational: " + to_string());
  return c_[0];
}

bool Cyclotomic::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

std::vector<Rational> Cyclotomic::coordinates_in(int m) const {
  if (m % n_ != 0) throw DomainError("coordinates_in: conductor does not divide target");
  if (m == n_) return c_;
  const int step = m / n_;
  std::vector<Rational> poly(static_cast<std::size_t>(step) * (c_.size() - 1) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
  const std::vector<long>& phi = cyclotomic_coefficients(m);
  const int d = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(poly.size()) - 1; k >= d; --k) {
    if (sgn(poly[k]) == 0) continue;
    const Rational c = poly[k];
    for (int i = 0; i <= d; ++i)
      if (phi[i] != 0) poly[k - d + i] -= c * phi[i];
  }
  poly.resize(d);
  return poly;
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (n_ == 1) return *this;
  if (std::gcd(mod_pos(a, n_), static_cast<long>(n_)) != 1)
    throw DomainError("galois: exponent not coprime to conductor");
  std::vector<Rational> poly(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) poly[mod_pos(a * static_cast<long>(i), n_)] += c_[i];
  Cyclotomic out;
  out.reduce_from(n_, std::move(poly));
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  const int m = lcm_int(n_, o.n_);
  std::vector<Rational> a = coordinates_in(m);
  const std::vector<Rational> b = o.coordinates_in(m);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  n_ = m;
  c_ = std::move(a);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic out = a;
  for (auto& c : out.c_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    for (auto& c : c_) c *= o.c_[0];
    normalize();
    return *this;
  }
  if (n_ == 1) {
    const Rational s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
  }
  const int m = lcm_int(n_, o.n_);
  const std::vector<Rational> a = coordinates_in(m);
  const std::vector<Rational> b = o.coordinates_in(m);
  std::vector<Rational> poly(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) poly[i + j] += a[i] * b[j];
  }
  reduce_from(m, std::move(poly));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  const std::size_t d = c_.size();
  // Column j holds the coordinates of this * zeta^j.
  std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d));
  for (std::size_t j = 0; j < d; ++j) {
    const std::vector<Rational> col = (*this * zeta(n_, static_cast<long>(j))).coordinates_in(n_);
    for (std::size_t i = 0; i < d; ++i) mat[i][j] = col[i];
  }
  std::vector<Rational> rhs(d);
  rhs[0] = 1;
  auto sol = solve_rational(std::move(mat), std::move(rhs));
  if (!sol) throw InternalError("cyclotomic inverse: singular multiplication matrix");
  return from_coefficients(n_, *sol);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const double angle = two_pi * static_cast<double>(i) / n_;
    z += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  if (a.n_ == 1 || b.n_ == 1) return false;  // normalized rational vs irrational
  const int m = lcm_int(a.n_, b.n_);
  return a.coordinates_in(m) == b.coordinates_in(m);
}

std::string Cyclotomic::to_string() const {
  if (n_ == 1) return weylhc::to_string(c_[0]);
  if (is_real()) {
    // Coordinates with respect to powers of c(n) = zeta + zeta^-1.
    const int d = euler_phi(n_) / 2;
    const std::size_t full = c_.size();
    std::vector<std::vector<Rational>> mat(full, std::vector<Rational>(d));
    Cyclotomic power(1L);
    const Cyclotomic theta = two_cos(n_, 1);
    for (int k = 0; k < d; ++k) {
      const std::vector<Rational> col = power.coordinates_in(n_);
      for (std::size_t i = 0; i < full; ++i) mat[i][k] = col[i];
      power *= theta;
    }
    auto sol = solve_rational(std::move(mat), c_);
    if (sol) {
      Poly p;
      for (int k = 0; k < d; ++k) p.set(k, (*sol)[k]);
      return p.to_string("c(" + std::to_string(n_) + ")");
    }
  }
  Poly p;
  for (std::size_t i = 0; i < c_.size(); ++i) p.set(static_cast<int>(i), c_[i]);
  std::string s = p.to_string("E(" + std::to_string(n_) + ")");
  return s;
}

std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a == b) return std::strong_ordering::equal;
  const auto za = a.to_complex();
  const auto zb = b.to_complex();
  if (za.real() != zb.real()) return za.real() < zb.real() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (za.imag() != zb.imag()) return za.imag() < zb.imag() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.conductor() != b.conductor()) return a.conductor() <=> b.conductor();
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    const int c = cmp(a.coefficients()[i], b.coefficients()[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace weylhc
