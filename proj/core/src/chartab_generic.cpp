#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "chartab_internal.hpp"
#include "weylhc/error.hpp"

namespace weylhc::detail {

namespace {

// a[i][j][k] = #{x in C_i : x^-1 g_k in C_j}, so that
// omega(C_i) omega(C_j) = sum_k a[i][j][k] omega(C_k) for every central character.
std::vector<std::vector<std::vector<long>>> class_coefficients(const CoxeterGroup& W) {
  const auto& classes = W.conjugacy_classes();
  const std::size_t r = classes.size();
  std::vector<std::vector<std::vector<long>>> a(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (Elem x = 0; x < W.size(); ++x) {
    const int i = W.class_of(x);
    const Elem xi = W.inverse(x);
    for (std::size_t k = 0; k < r; ++k) ++a[i][W.class_of(W.multiply(xi, classes[k].representative))][k];
  }
  return a;
}

struct Attempt {
  std::vector<ClassFunction> rows;
  bool ok = false;
};

Attempt try_seed(const CoxeterGroup& W, const std::vector<std::vector<std::vector<long>>>& a, int conductor,
                 std::uint64_t seed) {
  const auto& classes = W.conjugacy_classes();
  const int r = static_cast<int>(classes.size());
  Attempt out;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.5, 1.5);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    const double c = unif(rng);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m(j, k) += c * static_cast<double>(a[i][j][k]);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) return out;
  const Eigen::VectorXcd evals = solver.eigenvalues();
  double scale = 1.0;
  for (int x = 0; x < r; ++x) scale = std::max(scale, std::abs(evals[x]));
  for (int x = 0; x < r; ++x)
    for (int y = x + 1; y < r; ++y)
      if (std::abs(evals[x] - evals[y]) < 1e-7 * scale) return out;

  const double order = static_cast<double>(W.size());
  const Eigen::MatrixXcd vecs = solver.eigenvectors();
  // Numerical characters.
  std::vector<std::vector<std::complex<double>>> numeric(r, std::vector<std::complex<double>>(r));
  std::vector<long> degrees(r);
  for (int x = 0; x < r; ++x) {
    const std::complex<double> v0 = vecs(0, x);
    if (std::abs(v0) < 1e-12) return out;
    double norm = 0;
    for (int k = 0; k < r; ++k) norm += std::norm(vecs(k, x) / v0) / static_cast<double>(classes[k].size);
    const double deg = std::sqrt(order / norm);
    degrees[x] = std::lround(deg);
    if (std::abs(deg - static_cast<double>(degrees[x])) > 1e-6 * deg || degrees[x] <= 0) return out;
    for (int k = 0; k < r; ++k)
      numeric[x][k] = vecs(k, x) / v0 * static_cast<double>(degrees[x]) / static_cast<double>(classes[k].size);
  }

  // Exact values: power-basis coordinates in Q(zeta_N) from the Galois
  // conjugates sigma_a(chi(g)) = chi(g^a'), a' = a mod N, gcd(a', |g|) = 1.
  const int n = conductor;
  std::vector<int> units;
  for (int u = 1; u <= n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  const int phi = static_cast<int>(units.size());
  Eigen::MatrixXcd vand(phi, phi);
  for (int row = 0; row < phi; ++row)
    for (int col = 0; col < phi; ++col)
      vand(row, col) = std::polar(1.0, 2.0 * M_PI * units[row] * col / n);
  const auto lu = vand.fullPivLu();
  // Class of g_k^a' for each unit a.
  std::vector<std::vector<int>> galois_class(r, std::vector<int>(phi));
  for (int k = 0; k < r; ++k) {
    const Elem g = classes[k].representative;
    const int ord = W.element_order(g);
    for (int row = 0; row < phi; ++row) {
      long ap = units[row];
      while (std::gcd(ap, static_cast<long>(ord)) != 1) ap += n;
      galois_class[k][row] = W.class_of(W.power(g, ap));
    }
  }
  out.rows.assign(r, ClassFunction(r));
  for (int x = 0; x < r; ++x) {
    for (int k = 0; k < r; ++k) {
      Eigen::VectorXcd rhs(phi);
      for (int row = 0; row < phi; ++row) rhs(row) = numeric[x][galois_class[k][row]];
      const Eigen::VectorXcd c = lu.solve(rhs);
      std::vector<Rational> coeffs(phi);
      for (int col = 0; col < phi; ++col) {
        const double re = c(col).real();
        const long rounded = std::lround(re);
        if (std::abs(re - static_cast<double>(rounded)) > 1e-6 || std::abs(c(col).imag()) > 1e-6) return out;
        coeffs[col] = rounded;
      }
      out.rows[x][k] = Cyclotomic::from_coefficients(n, coeffs);
    }
  }

  // Certification: each omega = |C| chi / chi(1) is a homomorphism of the
  // class algebra, checked exactly in coordinates.
  for (int x = 0; x < r; ++x) {
    std::vector<Cyclotomic> omega(r);
    std::vector<std::vector<Rational>> coords(r);
    for (int k = 0; k < r; ++k) {
      omega[k] = out.rows[x][k] * Cyclotomic(fraction(Integer(static_cast<unsigned long>(classes[k].size)), degrees[x]));
      coords[k] = omega[k].coordinates_in(n);
    }
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        std::vector<Rational> sum(phi, Rational(0));
        for (int k = 0; k < r; ++k) {
          const long c = a[i][j][k];
          if (c == 0) continue;
          for (int t = 0; t < phi; ++t) sum[t] += c * coords[k][t];
        }
        if (Cyclotomic::from_coefficients(n, sum) != omega[i] * omega[j]) return out;
      }
  }
  out.ok = true;
  return out;
}

}  // namespace

std::vector<ClassFunction> generic_irreducibles(const CoxeterGroup& W) {
  const auto a = class_coefficients(W);
  const int conductor = W.datum().conductor();
  for (std::uint64_t seed = 1; seed <= 16; ++seed) {
    Attempt at = try_seed(W, a, conductor, 0x5eed0000ULL + seed);
    if (at.ok) return std::move(at.rows);
  }
  throw InternalError("class-algebra eigenvector computation did not certify for W(" + W.datum().type().to_string() +
                      ")");
}

}  // namespace weylhc::detail
