#include <array>
#include <stdexcept>

#include "oracles.hpp"

namespace oracle {

using namespace weylhc;

namespace {

using P = CyclotomicPoly;
using Mat = std::array<std::array<P, 2>, 2>;

Mat mul(const Mat& x, const Mat& y) {
  Mat z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return z;
}

// Alternating words of length len starting with generator `first`.
std::vector<int> alternating(int first, int len) {
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back((first + i) % 2);
  return w;
}

template <class Rep>
P trace_form(int m, int a, int b, const Rep& tr_of, const P& dim) {
  P sum;
  for (int len = 0; len <= m; ++len) {
    for (int first = 0; first < 2; ++first) {
      if ((len == 0 || len == m) && first == 1) continue;
      const auto w = alternating(first, len);
      std::vector<int> rev(w.rbegin(), w.rend());
      int e = 0;
      for (int g : w) e += g == 0 ? a : b;
      sum += tr_of(w) * tr_of(rev) * P::q(-e);
    }
  }
  const auto q = sum.exact_div(dim);
  if (!q) throw std::logic_error("trace form not divisible by the dimension");
  return *q;
}

}  // namespace

P trace_form_schur_linear(int m, int a, int b, int sign_s, int sign_t) {
  if (m % 2 == 1 && (a != b || sign_s != sign_t)) throw std::logic_error("not a representation");
  const P ts = sign_s > 0 ? P::q(a) : P(-1L), tt = sign_t > 0 ? P::q(b) : P(-1L);
  auto tr = [&](const std::vector<int>& w) {
    P x(1L);
    for (int g : w) x = x * (g == 0 ? ts : tt);
    return x;
  };
  return trace_form(m, a, b, tr, P(1L));
}

P trace_form_schur_2d(int m, int a, int b, const Cyclotomic& theta) {
  if ((a + b) % 2 != 0) throw std::logic_error("needs a square root of uv");
  Mat s, t;
  s[0][0] = P(-1L);
  s[1][0] = P(1L);
  s[1][1] = P::q(a);
  t[0][0] = P::q(b);
  t[0][1] = P::q(a) + P::q(b) + P::monomial(theta, (a + b) / 2);
  t[1][1] = P(-1L);
  auto mat = [&](const std::vector<int>& w) {
    Mat x;
    x[0][0] = P(1L);
    x[1][1] = P(1L);
    for (int g : w) x = mul(x, g == 0 ? s : t);
    return x;
  };
  const Mat lhs = mat(alternating(0, m)), rhs = mat(alternating(1, m));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (lhs[i][j] != rhs[i][j]) throw std::logic_error("braid relation fails");
  auto tr = [&](const std::vector<int>& w) {
    const Mat x = mat(w);
    return x[0][0] + x[1][1];
  };
  return trace_form(m, a, b, tr, P(2L));
}

}  // namespace oracle
