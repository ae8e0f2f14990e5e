#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylhc/coxeter.hpp"
#include "weylhc/cyclotomic_field.hpp"
#include "weylhc/laurent.hpp"

namespace weylhc {

// Values indexed by the conjugacy classes of a group, in the group's class order.
using ClassFunction = std::vector<Cyclotomic>;
using CyclotomicPoly = LaurentPoly<Cyclotomic>;

// Exact character table.  Rows are sorted by (degree, b-invariant, values
// compared entrywise with compare()); columns follow the group's class order.
struct CharacterTable {
  std::shared_ptr<const CoxeterGroup> group;
  std::vector<ClassFunction> irreducibles;
  // Type-specific label: a partition, a bipartition, an unordered pair with a
  // split tag, or phi_{d,b} for dihedral and exceptional components.  Labels
  // of a reducible group join the component labels with " x ".
  std::vector<std::string> labels;
  // phi_{d,b} with primes appended to break ties, e.g. "phi_{1,3}'".
  std::vector<std::string> universal_labels;
  std::vector<Poly> fake_degrees;
  std::vector<int> b_invariants;

  std::size_t size() const { return irreducibles.size(); }
  const std::vector<ConjugacyClass>& classes() const { return group->conjugacy_classes(); }
  std::uint64_t class_size(std::size_t k) const { return classes()[k].size; }
  Integer degree(std::size_t chi) const;
  // Index of the character carrying this label (either kind), or nullopt.
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t trivial() const;
  std::size_t sign() const;
};

// Tables of the standard groups W(A_n), W(B_n), W(D_n), I2(m).
CharacterTable char_table_symmetric(int n);
CharacterTable char_table_hyperoctahedral(int n);
CharacterTable char_table_demihyperoctahedral(int n);
CharacterTable char_table_dihedral(int m);

// Table computed from class multiplication coefficients: common eigenvectors
// found numerically, exact values recovered through Galois conjugates, then
// certified exactly against the class algebra and orthogonality.
CharacterTable char_table_generic(std::shared_ptr<const CoxeterGroup> W);

// Dispatches on the components of W: Murnaghan-Nakayama style formulas for
// A, B/C, D and dihedral components, the generic algorithm for E6, F4, H3
// and H4, and tensor products for reducible groups.
CharacterTable character_table(std::shared_ptr<const CoxeterGroup> W);

// Molien-series terms prod(1 - q^d_i) / det(1 - q w) for each class of W.
std::vector<CyclotomicPoly> molien_class_terms(const CoxeterGroup& W);
// Fake degree (1/|W|) sum_w chi(w) prod(1 - q^d_i) / det(1 - q w).
Poly fake_degree(const CoxeterGroup& W, const ClassFunction& chi);

// Class of W containing the representative of each class of W_J.
std::vector<int> class_fusion(const ParabolicSubgroup& sub, const CoxeterGroup& sup);
ClassFunction restrict(const ClassFunction& chi, const std::vector<int>& fusion);
ClassFunction induce(const ClassFunction& phi, const CoxeterGroup& sub, const CoxeterGroup& sup,
                     const std::vector<int>& fusion);

// (1/|W|) sum_C |C| chi(C) conj(psi(C)); throws InternalError if irrational.
Rational inner_product(const CoxeterGroup& W, const ClassFunction& chi, const ClassFunction& psi);
// Multiplicities of the irreducibles of the table in phi.
std::vector<Rational> decompose(const CharacterTable& table, const ClassFunction& phi);

struct OrthogonalityReport {
  bool rows = false;
  bool columns = false;
  bool degree_sum = false;  // sum chi(1)^2 = |W|
  bool ok() const { return rows && columns && degree_sum; }
};
OrthogonalityReport check_orthogonality(const CharacterTable& table);

// Rows of `a` and `b` agree after permuting rows (columns must already match).
bool same_rows_up_to_permutation(const std::vector<ClassFunction>& a, const std::vector<ClassFunction>& b);

}  // namespace weylhc
