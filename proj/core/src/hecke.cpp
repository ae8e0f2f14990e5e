#include "weylhc/hecke.hpp"

#include "weylhc/error.hpp"

namespace weylhc {

namespace {

CyclotomicPoly lift(const Poly& p) {
  return p.map_coeffs([](const Rational& c) { return Cyclotomic(c); });
}

CyclotomicPoly mono(const Cyclotomic& c, int e) { return CyclotomicPoly::monomial(c, e); }

// Poincare polynomial of I2(m) in the parameters x = q^ex (for s) and y = q^ey (for t).
CyclotomicPoly dihedral_poincare(int m, int ex, int ey) {
  const CyclotomicPoly one(1L);
  CyclotomicPoly sum;
  if (m % 2 == 0) {
    for (int i = 0; i < m / 2; ++i) sum += CyclotomicPoly::q(i * (ex + ey));
    return (one + CyclotomicPoly::q(ex)) * (one + CyclotomicPoly::q(ey)) * sum;
  }
  for (int i = 0; i < m; ++i) sum += CyclotomicPoly::q(i * ex);
  return (one + CyclotomicPoly::q(ex)) * sum;
}

void require_irreducible_rank_two_or_less(const CoxeterGroup& W) {
  const auto& comps = W.datum().type().components();
  if (comps.size() != 1 || W.rank() > 2)
    throw NotImplemented("Schur elements are implemented for A1 and irreducible rank-2 groups, not " +
                         W.datum().type().to_string());
}

}  // namespace

void HeckeParams::validate(const CoxeterGroup& W) const {
  if (static_cast<int>(exponents.size()) != W.rank())
    throw DomainError("Hecke parameters: expected " + std::to_string(W.rank()) + " exponents");
  for (int e : exponents)
    if (e < 1) throw DomainError("Hecke parameters: exponents must be positive");
  const auto M = W.datum().coxeter_matrix();
  for (int i = 0; i < W.rank(); ++i)
    for (int j = i + 1; j < W.rank(); ++j)
      if (M[i][j] % 2 == 1 && exponents[i] != exponents[j])
        throw DomainError("Hecke parameters: conjugate generators " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " need equal parameters");
}

std::string HeckeParams::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) s += ",";
    s += exponents[i] == 1 ? "q" : "q^" + std::to_string(exponents[i]);
  }
  return s + ")";
}

std::optional<Poly> SchurElement::rational() const {
  Poly out;
  for (const auto& [e, c] : value.terms()) {
    if (!c.is_rational()) return std::nullopt;
    out.set(e, c.rational());
  }
  return out;
}

std::optional<CyclotomicProduct> SchurElement::factorization() const {
  const auto r = rational();
  if (!r) return std::nullopt;
  return factor_into_cyclotomics(*r);
}

std::pair<SchurElement, SchurElement> schur_A1(int k) {
  if (k < 1) throw DomainError("schur_A1: k must be positive");
  const Poly c1 = cyclotomic(2).substitute_power(k);
  SchurElement triv{"[2]", "phi_{1,0}", lift(c1)};
  SchurElement sign{"[1,1]", "phi_{1,1}", lift(c1.shift(-k))};
  return {triv, sign};
}

CyclotomicProduct schur_G2_product(int k, int b) {
  if (k != 1 && k != 2 && k != 5) throw DomainError("schur_G2: k must be 1, 2 or 5");
  if (b != 1 && b != 2) throw DomainError("schur_G2: b must be 1 or 2");
  CyclotomicProduct c;
  c.scalar = 2;
  c.q_power = -2 * k + 1;
  return c * factor_cyclotomic_substitution(3, k + b - 2) * factor_cyclotomic_substitution(6, k - b + 1);
}

SchurElement schur_G2(int k, int b) {
  return {"phi_{2," + std::to_string(b) + "}", "phi_{2," + std::to_string(b) + "}",
          lift(schur_G2_product(k, b).expand())};
}

std::vector<SchurElement> schur_elements(const CharacterTable& table, const HeckeParams& params) {
  const CoxeterGroup& W = *table.group;
  require_irreducible_rank_two_or_less(W);
  params.validate(W);
  std::vector<SchurElement> out;
  if (W.rank() == 1) {
    const int a = params.exponents[0];
    const int s = W.class_of(W.generator(0));
    const CyclotomicPoly c1 = CyclotomicPoly(1L) + CyclotomicPoly::q(a);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const bool trivial = table.irreducibles[i][s] == Cyclotomic(1);
      out.push_back({table.labels[i], table.universal_labels[i], trivial ? c1 : c1.shift(-a)});
    }
    return out;
  }
  const int m = W.datum().coxeter_matrix()[0][1];
  const int a = params.exponents[0], b = params.exponents[1];
  const Elem s = W.generator(0), t = W.generator(1);
  const int cs = W.class_of(s), ct = W.class_of(t), cst = W.class_of(W.multiply(s, t));
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& chi = table.irreducibles[i];
    SchurElement e{table.labels[i], table.universal_labels[i], {}};
    if (chi[0] == Cyclotomic(1)) {
      const int ex = chi[cs] == Cyclotomic(1) ? a : -a;
      const int ey = chi[ct] == Cyclotomic(1) ? b : -b;
      e.value = dihedral_poincare(m, ex, ey);
    } else {
      // m (u + v + r theta)(uv + 1 - r theta) / (uv (4 - theta^2)), r^2 = uv,
      // theta = chi(st).
      const Cyclotomic theta = chi[cst];
      if (!theta.is_zero() && (a + b) % 2 != 0)
        throw DomainError("Schur elements of I2(" + std::to_string(m) +
                          ") with these parameters need a square root of q");
      const int half = (a + b) / 2;
      const CyclotomicPoly one(1L);
      const CyclotomicPoly f1 = CyclotomicPoly::q(a) + CyclotomicPoly::q(b) + mono(theta, half);
      const CyclotomicPoly f2 = CyclotomicPoly::q(a + b) + one - mono(theta, half);
      const Cyclotomic scale = Cyclotomic(static_cast<long>(m)) / (Cyclotomic(4) - theta * theta);
      e.value = (f1 * f2 * scale).shift(-(a + b));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SchurElement> schur_dihedral(int m, const HeckeParams& params) {
  return schur_elements(char_table_dihedral(m), params);
}

CyclotomicPoly hecke_poincare(const CoxeterGroup& W, const HeckeParams& params) {
  params.validate(W);
  CyclotomicPoly sum;
  for (Elem w = 0; w < W.size(); ++w) {
    int e = 0;
    for (int g : W.word(w)) e += params.exponents[g];
    sum += CyclotomicPoly::q(e);
  }
  return sum;
}

std::vector<FakeDegree> fake_degrees(const CharacterTable& table) {
  std::vector<FakeDegree> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    out.push_back({table.labels[i], table.universal_labels[i], table.fake_degrees[i], table.b_invariants[i]});
  return out;
}

Poly poincare_index(const CoxeterGroup& W, const std::vector<int>& J) {
  for (int j : J)
    if (j < 0 || j >= W.rank()) throw DomainError("poincare_index: generator index out of range");
  Poly sum;
  for (Elem w = 0; w < W.size(); ++w) {
    const Elem wi = W.inverse(w);
    bool minimal = true;
    for (int j : J)
      if (!W.is_positive(W.act(wi, static_cast<RootIndex>(j)))) minimal = false;
    if (minimal) sum += Poly::q(W.length(w));
  }
  return sum;
}

CyclotomicPoly principal_series_degree(const CharacterTable& table, const std::string& label,
                                       const HeckeParams& params) {
  const auto idx = table.find(label);
  if (!idx) throw DomainError("no character labelled " + label);
  const auto schur = schur_elements(table, params);
  const CyclotomicPoly& index = schur[table.trivial()].value;
  const auto d = index.exact_div(schur[*idx].value);
  if (!d)
    throw DomainError("[G:B] / c_phi is not a Laurent polynomial for the parameters " + params.to_string());
  return *d;
}

HeckeParams default_params(const CoxeterGroup& W, int k) {
  if (k < 1) throw DomainError("k must be positive");
  require_irreducible_rank_two_or_less(W);
  if (W.rank() == 1) return {{k}};
  const int m = W.datum().coxeter_matrix()[0][1];
  if (m % 2 == 1) return HeckeParams::equal(2, k);
  return HeckeParams::g2(k);
}

CyclotomicPoly principal_series_degree(const CharacterTable& table, const std::string& label, int k) {
  if (k < 1) throw DomainError("k must be positive");
  return principal_series_degree(table, label, HeckeParams::equal(table.group->rank(), k));
}

}  // namespace weylhc
