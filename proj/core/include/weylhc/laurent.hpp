#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "weylhc/error.hpp"
#include "weylhc/cyclotomic_field.hpp"  // coefficient helpers must precede the template
#include "weylhc/rational.hpp"

namespace weylhc {

// Univariate Laurent polynomial sum_e c_e q^e over an exact coefficient
// ring R.  No zero coefficient is ever stored.
//
// R must provide: construction from long, +, -, *, /, ==, and the free
// functions is_zero(R), is_one(R), display_sign(R), to_string(R).
template <class R>
class LaurentPoly {
 public:
  using Coeff = R;
  using Terms = std::map<int, R>;

  LaurentPoly() = default;
  LaurentPoly(long c) { set(0, R(c)); }             // NOLINT: implicit constant
  LaurentPoly(const R& c) { set(0, c); }            // NOLINT: implicit constant

  static LaurentPoly monomial(const R& c, int exponent) {
    LaurentPoly p;
    p.set(exponent, c);
    return p;
  }
  static LaurentPoly q(int exponent = 1) { return monomial(R(1), exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero polynomial");
    return terms_.rbegin()->first;
  }
  int valuation() const {
    if (terms_.empty()) throw DomainError("valuation of the zero polynomial");
    return terms_.begin()->first;
  }
  R coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }
  R leading_coeff() const { return terms_.rbegin()->second; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  bool is_monomial() const { return terms_.size() == 1; }

  void set(int e, const R& c) {
    if (weylhc::is_zero(c))
      terms_.erase(e);
    else
      terms_[e] = c;
  }
  void add_term(int e, const R& c) {
    if (weylhc::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (weylhc::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, R(0) - c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const R& s) {
    if (weylhc::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = c * s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend LaurentPoly operator*(LaurentPoly a, const R& s) { return a *= s; }
  friend LaurentPoly operator*(const R& s, LaurentPoly a) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(int k) const {
    if (k < 0) throw DomainError("negative power of a Laurent polynomial");
    LaurentPoly out(1L), base = *this;
    while (k > 0) {
      if (k & 1) out *= base;
      base *= base;
      k >>= 1;
    }
    return out;
  }

  // q -> q^m.  m == 0 collapses to the constant p(1).
  LaurentPoly substitute_power(int m) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e * m, c);
    return out;
  }

  LaurentPoly shift(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> LaurentPoly<decltype(f(std::declval<R>()))> {
    LaurentPoly<decltype(f(std::declval<R>()))> out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  // Exact quotient a / d in the Laurent ring, or nullopt when d does not
  // divide a.
  std::optional<LaurentPoly> exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    if (is_zero()) return LaurentPoly();
    const int shift_by = valuation() - d.valuation();
    Terms rem;
    for (const auto& [e, c] : terms_) rem.emplace(e - valuation(), c);
    std::map<int, R> den;
    for (const auto& [e, c] : d.terms_) den.emplace(e - d.valuation(), c);
    const int dd = den.rbegin()->first;
    const R lead = den.rbegin()->second;
    const bool unit_lead = weylhc::is_one(lead);
    const R lead_inv = unit_lead ? R(1) : R(1) / lead;
    LaurentPoly quot;
    while (!rem.empty() && rem.rbegin()->first >= dd) {
      const int e = rem.rbegin()->first;
      const R c = unit_lead ? rem.rbegin()->second : rem.rbegin()->second * lead_inv;
      quot.terms_.emplace(e - dd, c);
      for (const auto& [de, dc] : den) {
        const int t = e - dd + de;
        auto it = rem.find(t);
        R prod = c * dc;
        if (it == rem.end()) {
          rem.emplace(t, R(0) - prod);
        } else {
          it->second = it->second - prod;
          if (weylhc::is_zero(it->second)) rem.erase(it);
        }
      }
    }
    if (!rem.empty()) return std::nullopt;
    return quot.shift(shift_by);
  }

  // Value at a nonzero point (or any point when there are no negative
  // exponents).
  R evaluate(const R& x) const {
    R out(0);
    for (const auto& [e, c] : terms_) {
      R p(1);
      if (e >= 0) {
        for (int i = 0; i < e; ++i) p = p * x;
      } else {
        R inv = R(1) / x;
        for (int i = 0; i < -e; ++i) p = p * inv;
      }
      out = out + c * p;
    }
    return out;
  }

  // Descending exponents with explicit signs: "q^4 - q^2 + 1".
  std::string to_string(std::string_view var = "q") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const int e = it->first;
      const R& c = it->second;
      const int s = display_sign(c);
      std::string body;
      if (s == 0) {
        body = "(" + weylhc::to_string(c) + ")";
        os << (first ? "" : " + ");
      } else {
        R mag = s < 0 ? R(0) - c : c;
        if (first)
          os << (s < 0 ? "-" : "");
        else
          os << (s < 0 ? " - " : " + ");
        if (!weylhc::is_one(mag) || e == 0) body = weylhc::to_string(mag);
      }
      if (e != 0) {
        if (!body.empty()) body += "*";
        body += std::string(var);
        if (e != 1) body += "^" + std::to_string(e);
      }
      os << body;
      first = false;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using Poly = LaurentPoly<Rational>;

}  // namespace weylhc
