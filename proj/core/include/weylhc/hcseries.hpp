#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylhc/chartab.hpp"
#include "weylhc/hecke.hpp"

namespace weylhc {

// Characters of W(E7), W(E8) that neither parabolic restriction nor degree
// separates.  Stored as constants; those groups are never enumerated.
struct ExceptionalFamilyRecord {
  std::string type;  // "E7" or "E8"
  int dimension = 0;  // 512 or 4096
  std::string citation;
};
const std::vector<ExceptionalFamilyRecord>& exceptional_families();
std::optional<ExceptionalFamilyRecord> exceptional_family(const std::string& type);

// Unordered pairs (i < j) of distinct irreducibles with equal restrictions to
// every proper standard parabolic subgroup.
std::vector<std::pair<std::size_t, std::size_t>> pairs_equal_on_proper_parabolics(const CharacterTable& table);

enum class Verdict { SeparatedByDegree, SeparatedBySchur, Unresolved, DocumentedException };
std::string to_string(Verdict v);

struct PairSeparation {
  std::size_t first = 0, second = 0;  // rows of the character table
  std::string first_label, second_label;
  Verdict verdict = Verdict::Unresolved;
  std::optional<CyclotomicPoly> first_witness, second_witness;  // Schur elements
  std::string note;
};

// Degree first, then Schur elements for the given parameters when they are
// implemented for the group.  Without parameters the Schur step is skipped.
PairSeparation separate_pair(const CharacterTable& table, std::pair<std::size_t, std::size_t> pair,
                             const std::optional<HeckeParams>& params);

// Decomposition of the restriction of one character to W_J.
struct RestrictionRecord {
  std::vector<int> J;  // 0-based
  std::vector<std::pair<std::string, Integer>> constituents;  // label -> multiplicity
};

struct AmbiguityReport {
  std::string type;
  bool computed = false;  // false for documented-only types and failures
  std::optional<ExceptionalFamilyRecord> exceptional;
  std::vector<PairSeparation> pairs;
  // For each pair, restriction records of the first character (equal to the
  // second's by construction) on every proper parabolic; filled on request.
  std::vector<std::vector<RestrictionRecord>> restrictions;
  std::string error;           // non-empty when the check could not run
  bool error_is_bound = false; // the error was an enumeration bound
  bool matches_expectation = false;
  std::string expectation;     // what the case analysis predicts for this type

  bool all_resolved() const;
};

struct CheckOptions {
  std::uint64_t bound = CoxeterGroup::kDefaultBound;
  std::optional<int> k;              // Hecke parameter exponent
  bool include_e6 = false;           // E6 is skipped unless set
  bool restriction_vectors = false;  // fill AmbiguityReport::restrictions
  unsigned threads = 0;              // 0: hardware concurrency
};

AmbiguityReport check_type(const std::string& type, const CheckOptions& options);
// One report per type, in the order given; types run concurrently.
std::vector<AmbiguityReport> run_proposition_check(const std::vector<std::string>& types, const CheckOptions& options);
// The types covered by the default run: A1-A7, B2-B6, C3-C6, D4-D6, G2, F4,
// H3, H4, I2(5)-I2(12), and E6 when requested.
std::vector<std::string> default_check_types(bool include_e6);

// For a reducible group: every (1')-pair has equal restrictions to each
// irreducible component, so the pair agrees componentwise.  True for a single
// component.
bool reducible_factor_check(const CharacterTable& table);

}  // namespace weylhc
