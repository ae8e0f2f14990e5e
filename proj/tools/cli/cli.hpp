#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylhc/chartab.hpp"
#include "weylhc/cyclo.hpp"
#include "weylhc/hcseries.hpp"

namespace weylhc::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kBadInput = 2, kBoundExceeded = 3 };

enum class Format { Json, Tsv, Text };
Format parse_format(const std::string& s);  // throws InvalidType

struct RunConfig {
  std::vector<std::string> types;
  std::uint64_t bound = CoxeterGroup::kDefaultBound;
  Format format = Format::Json;
  std::string out;  // empty: stdout
  std::optional<int> k;
  bool include_e6 = false;
  bool restriction_vectors = false;
  std::optional<std::vector<int>> J;  // 0-based
  unsigned threads = 0;
};

// key = value lines; '#' starts a comment.  Throws InvalidType on malformed
// lines or unknown keys.
std::map<std::string, std::string> parse_config_text(const std::string& text);
void apply_config(RunConfig& config, const std::map<std::string, std::string>& values);

// "1,3" -> {0, 2}; checks range and duplicates against the rank.
std::vector<int> parse_J(const std::string& text, int rank);

// One identity of the G2 cyclotomic factorisation table: the factorisation
// of Phi_3(q^(k+b-2)) Phi_6(q^(k-b+1)).
struct Table1Cell {
  int k = 0;
  int b = 0;
  CyclotomicProduct claimed;
  std::optional<CyclotomicProduct> computed;
  bool match() const { return computed && *computed == claimed; }
};
std::vector<Table1Cell> table1_cells(const std::optional<int>& k);

// Serializations.  Every number is written as a string.
std::string chartab_json(const CharacterTable& table);
std::string chartab_tsv(const CharacterTable& table);
std::string chartab_text(const CharacterTable& table);
std::string report_json(const std::vector<AmbiguityReport>& reports, const CheckOptions& options);
std::string report_tsv(const std::vector<AmbiguityReport>& reports);
std::string report_text(const std::vector<AmbiguityReport>& reports);

int cmd_chartab(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table1(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_relative_weyl(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_schur(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_fakedeg(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_restrict(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (flags over WEYLHC_BOUND over --config file over defaults) and
// dispatches to a command.  `env_bound` stands in for the environment.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_bound);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylhc::cli
