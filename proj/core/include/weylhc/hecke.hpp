#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylhc/chartab.hpp"
#include "weylhc/cyclo.hpp"

namespace weylhc {

// Parameter q^e_i for generator i: T_i^2 = (q^e_i - 1) T_i + q^e_i.
struct HeckeParams {
  std::vector<int> exponents;

  static HeckeParams equal(int rank, int e = 1) { return {std::vector<int>(rank, e)}; }
  // The G2 parameters (q, q^(2k-1)).
  static HeckeParams g2(int k) { return {{1, 2 * k - 1}}; }

  // Throws DomainError unless there is one positive exponent per generator and
  // conjugate generators (odd Coxeter-matrix entries) share their exponent.
  void validate(const CoxeterGroup& W) const;
  std::string to_string() const;
};

struct SchurElement {
  std::string label;            // type-specific label from the character table
  std::string universal_label;  // phi_{d,b}
  CyclotomicPoly value;

  // The value as a polynomial with rational coefficients, if it is one.
  std::optional<Poly> rational() const;
  // c * q^k * prod Phi_d(q)^e, when the value has rational coefficients and
  // factors that way.
  std::optional<CyclotomicProduct> factorization() const;
};

// c_1 = Phi_2(q^k) and c_eps = q^-k Phi_2(q^k) for the Hecke algebra of type
// A1 with parameter q^k.
std::pair<SchurElement, SchurElement> schur_A1(int k);

// c_{phi_{2,b}} = 2 q^(-2k+1) Phi_3(q^(k+b-2)) Phi_6(q^(k-b+1)) for G2 with
// parameters (q, q^(2k-1)); k in {1, 2, 5}, b in {1, 2}.
SchurElement schur_G2(int k, int b);
// The same element as a cyclotomic product.
CyclotomicProduct schur_G2_product(int k, int b);

// Schur elements of every irreducible character of a group of rank 1 or an
// irreducible group of rank 2 (A1, A2, B2, G2, I2(m)), aligned with the rows
// of `table`.  Characters are identified by their values on s, t and st.
// For m even with some 2-dimensional character the product of the two
// parameters must be an even power of q.
std::vector<SchurElement> schur_elements(const CharacterTable& table, const HeckeParams& params);

// schur_elements on the standard I2(m) table.
std::vector<SchurElement> schur_dihedral(int m, const HeckeParams& params);

// sum_{w in W} ind(T_w): the Schur element of the index representation.
CyclotomicPoly hecke_poincare(const CoxeterGroup& W, const HeckeParams& params);

struct FakeDegree {
  std::string label;
  std::string universal_label;
  Poly polynomial;
  int b_invariant = 0;
};
std::vector<FakeDegree> fake_degrees(const CharacterTable& table);

// sum of q^l(w) over the minimal length representatives w of the cosets W_J w.
Poly poincare_index(const CoxeterGroup& W, const std::vector<int>& J);

// Degree [G:B] / c_phi of the principal-series character attached to phi,
// where [G:B] = sum_w ind(T_w) is the Schur element of the trivial character.
// Supported for A1 and the rank-2 types covered by schur_elements.  Throws
// DomainError when the quotient is not a Laurent polynomial, which happens
// for unequal parameters such as (q, q^9).
CyclotomicPoly principal_series_degree(const CharacterTable& table, const std::string& label,
                                       const HeckeParams& params);
// Parameters used for an integer k: q^k for A1, (q^k, q^k) for odd m and
// (q, q^(2k-1)) for even m.
HeckeParams default_params(const CoxeterGroup& W, int k);
// The principal series over F_{q^k}: every parameter equals q^k.
CyclotomicPoly principal_series_degree(const CharacterTable& table, const std::string& label, int k);

}  // namespace weylhc
