#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "weylhc/chartab.hpp"

namespace weylhc::detail {

using Partition = std::vector<int>;  // non-increasing, no zero parts

// All partitions of n, in reverse lexicographic order ([n] first).
std::vector<Partition> partitions(int n);
std::string partition_label(const Partition& p);

// chi_lambda on a permutation with the given cycle lengths (Murnaghan-Nakayama).
long symmetric_character(const Partition& lambda, const std::vector<int>& cycles);

// chi_(lambda;mu) of W(B_n) on a signed cycle type: (length, sign) per cycle.
// ((n);-) is the trivial character and (-;(1^n)) the sign character.
long hyperoctahedral_character(const Partition& lambda, const Partition& mu,
                               const std::vector<std::pair<int, int>>& cycles);

// Characters of one irreducible component, evaluated on elements given as
// words in the component's standard generators.
class ComponentCharacters {
 public:
  virtual ~ComponentCharacters() = default;
  const std::vector<std::string>& labels() const { return labels_; }
  virtual std::vector<Cyclotomic> values(const std::vector<int>& word) const = 0;

 protected:
  std::vector<std::string> labels_;
};

std::shared_ptr<const ComponentCharacters> symmetric_component(int n);          // W(A_n)
std::shared_ptr<const ComponentCharacters> hyperoctahedral_component(int n);    // W(B_n) = W(C_n)
std::shared_ptr<const ComponentCharacters> demihyperoctahedral_component(int n);  // W(D_n)
// Closed-form dihedral characters on the standard I2(m) group.
std::vector<ClassFunction> dihedral_rows(const CoxeterGroup& W, int m, std::vector<std::string>& labels);

// Irreducible characters from the class algebra, in no particular order.
std::vector<ClassFunction> generic_irreducibles(const CoxeterGroup& W);

// Sorts rows, computes fake degrees and labels.  Empty `labels` means the
// universal labels are used for both kinds.
CharacterTable assemble(std::shared_ptr<const CoxeterGroup> W, std::vector<ClassFunction> rows,
                        std::vector<std::string> labels);

}  // namespace weylhc::detail
