#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylhc/laurent.hpp"
#include "weylhc/matrix.hpp"
#include "weylhc/rootdata.hpp"

namespace weylhc {

using Elem = std::uint32_t;
using RootIndex = std::uint16_t;

struct ConjugacyClass {
  Elem representative;  // smallest element id in the class
  std::uint64_t size;
};

// A finite Coxeter group, every element stored as the permutation it induces
// on the roots.  Roots are indexed 0..N-1 (positive, in datum order) and
// N..2N-1 (their negatives).  Element ids follow shortlex order of reduced
// words: 0 is the identity and 1..rank are the simple reflections.
// Classes and degrees are computed during enumeration; afterwards the object
// is read-only.
class CoxeterGroup {
 public:
  static constexpr std::uint64_t kDefaultBound = 200000;
  static constexpr std::uint64_t kHardCap = 10000000;

  // Throws BoundExceeded when |W| > bound, when bound > kHardCap, or when a
  // component of type E7 or E8 is present.
  static CoxeterGroup enumerate(const RootDatum& datum, std::uint64_t bound = kDefaultBound);

  const RootDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  std::size_t size() const { return length_.size(); }
  Integer order() const { return Integer(static_cast<unsigned long>(size())); }
  int num_positive_roots() const { return n_pos_; }

  Elem identity() const { return 0; }
  Elem generator(int i) const { return static_cast<Elem>(i + 1); }
  Elem longest_element() const { return static_cast<Elem>(size() - 1); }

  // Image of root r under w.
  RootIndex act(Elem w, RootIndex r) const { return perm_[static_cast<std::size_t>(w) * n_roots_ + r]; }
  std::span<const RootIndex> permutation(Elem w) const {
    return {perm_.data() + static_cast<std::size_t>(w) * n_roots_, static_cast<std::size_t>(n_roots_)};
  }
  RootIndex negate(RootIndex r) const { return static_cast<RootIndex>(r < n_pos_ ? r + n_pos_ : r - n_pos_); }
  bool is_positive(RootIndex r) const { return r < n_pos_; }

  Elem multiply(Elem a, Elem b) const;
  Elem inverse(Elem a) const;
  Elem power(Elem a, long k) const;
  int element_order(Elem a) const;
  int length(Elem w) const { return length_[w]; }
  // Number of positive roots sent to negative roots (recomputed from the permutation).
  int inversion_count(Elem w) const;

  // Shortlex-minimal reduced word (0-based generator indices).
  std::vector<int> word(Elem w) const;
  Elem from_word(const std::vector<int>& word) const;
  std::string word_string(Elem w) const;  // 1-based, e.g. "121"; "()" for the identity
  // Id of the element whose simple-root images are given; throws if none.
  Elem find(std::span<const RootIndex> simple_images) const;

  // Reflection s_beta for a root beta (any sign).
  Elem reflection(RootIndex root) const;

  // Conjugacy classes ordered by representative id, i.e. by (length, shortlex).
  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  int class_of(Elem w) const { return class_of_[w]; }

  // Matrix of w acting on the simple-root coordinates.
  Matrix<Cyclotomic> reflection_matrix(Elem w) const;

  // Degrees of the basic invariants, ascending, computed from the eigenvalues
  // of a Coxeter element in each irreducible component.
  const std::vector<int>& degrees() const { return degrees_; }
  // sum_w q^l(w).
  Poly poincare_polynomial() const;

 private:
  CoxeterGroup() = default;
  Elem lookup(const std::u16string& key) const;
  void compute_classes();
  void compute_degrees();

  RootDatum datum_ = RootDatum::from_type(CartanType());
  int n_pos_ = 0;
  int n_roots_ = 0;
  std::vector<RootIndex> perm_;
  std::vector<std::uint16_t> length_;
  std::vector<Elem> parent_;
  std::vector<std::int8_t> last_;
  std::unordered_map<std::u16string, Elem> index_;
  std::vector<Elem> reflections_;  // positive root -> reflection

  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> degrees_;
};

// W_J together with its embedding into W.
struct ParabolicSubgroup {
  std::vector<int> J;          // 0-based generator indices of W, ascending
  CoxeterGroup group;          // generator k of group is s_{J[k]}
  std::vector<Elem> embedding; // element id in group -> element id in W
};

// J must consist of distinct indices in [0, rank).  Indices are sorted.
ParabolicSubgroup parabolic_subgroup(const CoxeterGroup& W, std::vector<int> J);

// N_W(W_J)/W_J.  Coset representatives are the minimal-length elements of
// their cosets; the table gives the index of the coset of reps[i]*reps[j].
struct RelativeWeylGroup {
  std::vector<int> J;
  std::vector<Elem> coset_reps;
  std::vector<std::vector<int>> table;
  std::uint64_t normalizer_order = 0;
  std::uint64_t parabolic_order = 0;

  std::size_t order() const { return coset_reps.size(); }
};

RelativeWeylGroup relative_weyl_group(const CoxeterGroup& W, const std::vector<int>& J);

// Roots (as indices into W's root list) of the parabolic subsystem Phi_J.
std::vector<RootIndex> parabolic_roots(const CoxeterGroup& W, const std::vector<int>& J);

struct SplittingResult {
  bool splits = false;
  std::vector<Elem> section;  // one element per coset, closed under multiplication
};

// Searches for a complement to W_J in N_W(W_J): first the minimal-length
// coset representatives, then a backtracking search over lifts of the
// quotient's elements.
SplittingResult normalizer_splitting_check(const CoxeterGroup& W, const std::vector<int>& J);

}  // namespace weylhc
