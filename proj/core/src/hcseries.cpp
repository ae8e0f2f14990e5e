#include "weylhc/hcseries.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <thread>

#include "weylhc/error.hpp"

namespace weylhc {

namespace {

const char* const kCitation =
    "Geck and Pfeiffer, Characters of Finite Coxeter Groups and Iwahori-Hecke Algebras (2000), 6.3.6";

std::vector<std::vector<int>> proper_subsets(int rank) {
  std::vector<std::vector<int>> out;
  const unsigned full = (1u << rank) - 1;
  for (unsigned mask = 0; mask < full; ++mask) {
    std::vector<int> J;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) J.push_back(i);
    out.push_back(std::move(J));
  }
  return out;
}

// Maximal proper subsets; restriction is transitive, so equality on these
// implies equality on every proper parabolic.
std::vector<std::vector<int>> maximal_proper_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (int drop = 0; drop < rank; ++drop) {
    std::vector<int> J;
    for (int i = 0; i < rank; ++i)
      if (i != drop) J.push_back(i);
    out.push_back(std::move(J));
  }
  return out;
}

std::shared_ptr<const CoxeterGroup> enumerate(const CartanType& type, std::uint64_t bound) {
  return std::make_shared<const CoxeterGroup>(CoxeterGroup::enumerate(RootDatum::from_type(type), bound));
}

std::string pair_key(const std::string& a, const std::string& b) { return a < b ? a + "|" + b : b + "|" + a; }

struct Expectation {
  std::vector<std::string> pairs;  // pair_key of universal labels
  bool schur_required = false;     // the pair must be Schur-separated when k is given
  std::string text;
};

Expectation expectation_for(const CartanType& type) {
  if (!type.is_irreducible())
    return {{}, false, "no pairs: every component is a proper parabolic subgroup"};
  const std::string name = type.to_string();
  if (name == "A1")
    return {{pair_key("phi_{1,0}", "phi_{1,1}")}, true,
            "one pair {trivial, sign}, separated by Schur elements"};
  // I2(6) is G2 as a Coxeter system.
  if (name == "G2" || name == "I2(6)")
    return {{pair_key("phi_{2,1}", "phi_{2,2}")}, true,
            "one pair {phi_{2,1}, phi_{2,2}}, separated by Schur elements"};
  if (type.is_crystallographic()) return {{}, false, "no pairs"};
  return {{}, false, "no pairs (non-crystallographic type, outside the Weyl-group case analysis)"};
}

bool is_documented_only(const CartanType& type) {
  return type.is_irreducible() && (type.to_string() == "E7" || type.to_string() == "E8");
}

bool mentions(const CartanType& type, const std::string& name) {
  for (const auto& c : type.components())
    if (CartanType({c}).to_string() == name) return true;
  return false;
}

std::vector<RestrictionRecord> restriction_records(const CharacterTable& table, std::size_t chi) {
  const CoxeterGroup& W = *table.group;
  std::vector<RestrictionRecord> out;
  for (const auto& J : proper_subsets(W.rank())) {
    auto sub = parabolic_subgroup(W, J);
    const auto fusion = class_fusion(sub, W);
    const auto sub_table = character_table(std::make_shared<const CoxeterGroup>(std::move(sub.group)));
    const auto mult = decompose(sub_table, restrict(table.irreducibles[chi], fusion));
    RestrictionRecord rec{J, {}};
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (mult[i] != 0) rec.constituents.emplace_back(sub_table.labels[i], mult[i].get_num());
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

const std::vector<ExceptionalFamilyRecord>& exceptional_families() {
  static const std::vector<ExceptionalFamilyRecord> records{{"E7", 512, kCitation}, {"E8", 4096, kCitation}};
  return records;
}

std::optional<ExceptionalFamilyRecord> exceptional_family(const std::string& type) {
  for (const auto& r : exceptional_families())
    if (r.type == type) return r;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_equal_on_proper_parabolics(const CharacterTable& table) {
  const CoxeterGroup& W = *table.group;
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (table.irreducibles[i][0] == table.irreducibles[j][0]) candidates.emplace_back(i, j);
  for (const auto& J : maximal_proper_subsets(W.rank())) {
    if (candidates.empty()) break;
    const auto sub = parabolic_subgroup(W, J);
    const auto fusion = class_fusion(sub, W);
    std::vector<ClassFunction> res;
    res.reserve(table.size());
    for (const auto& chi : table.irreducibles) res.push_back(restrict(chi, fusion));
    std::erase_if(candidates, [&](const auto& p) { return res[p.first] != res[p.second]; });
  }
  return candidates;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SeparatedByDegree: return "separated-by-degree";
    case Verdict::SeparatedBySchur: return "separated-by-schur";
    case Verdict::Unresolved: return "unresolved";
    case Verdict::DocumentedException: return "documented-exception";
  }
  return "unknown";
}

PairSeparation separate_pair(const CharacterTable& table, std::pair<std::size_t, std::size_t> pair,
                             const std::optional<HeckeParams>& params) {
  const auto [i, j] = pair;
  if (i >= table.size() || j >= table.size() || i == j) throw DomainError("separate_pair: invalid pair");
  PairSeparation out;
  out.first = i;
  out.second = j;
  out.first_label = table.labels[i];
  out.second_label = table.labels[j];
  const Integer di = table.degree(i), dj = table.degree(j);
  if (di != dj) {
    out.verdict = Verdict::SeparatedByDegree;
    out.note = "degrees " + di.get_str() + " and " + dj.get_str();
    return out;
  }
  const CartanType& type = table.group->datum().type();
  if (is_documented_only(type)) {
    out.verdict = Verdict::DocumentedException;
    out.note = kCitation;
    return out;
  }
  if (!params) {
    out.note = "equal degrees; no Hecke parameters supplied";
    return out;
  }
  std::vector<SchurElement> schur;
  try {
    schur = schur_elements(table, *params);
  } catch (const NotImplemented& e) {
    out.note = std::string("equal degrees; ") + e.what();
    return out;
  } catch (const DomainError& e) {
    out.note = std::string("equal degrees; ") + e.what();
    return out;
  }
  const auto& ci = schur[i].value;
  const auto& cj = schur[j].value;
  if (ci == cj) {
    out.note = "equal degrees and equal Schur elements for parameters " + params->to_string();
    return out;
  }
  out.verdict = Verdict::SeparatedBySchur;
  out.first_witness = ci;
  out.second_witness = cj;
  out.note = "Schur elements differ for parameters " + params->to_string();
  return out;
}

bool AmbiguityReport::all_resolved() const {
  for (const auto& p : pairs)
    if (p.verdict == Verdict::Unresolved) return false;
  return true;
}

AmbiguityReport check_type(const std::string& type_text, const CheckOptions& options) {
  AmbiguityReport report;
  report.type = type_text;
  try {
    const CartanType type = CartanType::parse(type_text);
    report.type = type.to_string();
    const Expectation expected = expectation_for(type);
    report.expectation = expected.text;
    if (is_documented_only(type)) {
      report.exceptional = exceptional_family(report.type);
      report.expectation = "documented exceptional family; not enumerated";
      report.matches_expectation = true;
      return report;
    }
    if (mentions(type, "E7") || mentions(type, "E8"))
      throw BoundExceeded("components E7 and E8 are documented only and never enumerated");
    if (mentions(type, "E6") && !options.include_e6) {
      report.error = "E6 is skipped unless include_e6 is set";
      report.matches_expectation = true;
      return report;
    }
    const auto W = enumerate(type, options.bound);
    const auto table = character_table(W);
    std::optional<HeckeParams> params;
    if (options.k) {
      try {
        params = default_params(*W, *options.k);
      } catch (const NotImplemented&) {
        params = HeckeParams::equal(W->rank(), *options.k);
      }
    }
    std::vector<std::string> found;
    for (const auto& p : pairs_equal_on_proper_parabolics(table)) {
      report.pairs.push_back(separate_pair(table, p, params));
      found.push_back(pair_key(table.universal_labels[p.first], table.universal_labels[p.second]));
      if (options.restriction_vectors) report.restrictions.push_back(restriction_records(table, p.first));
    }
    report.computed = true;
    std::sort(found.begin(), found.end());
    auto wanted = expected.pairs;
    std::sort(wanted.begin(), wanted.end());
    bool ok = found == wanted;
    if (ok && expected.schur_required && options.k)
      for (const auto& p : report.pairs)
        if (p.verdict != Verdict::SeparatedBySchur) ok = false;
    report.matches_expectation = ok;
  } catch (const BoundExceeded& e) {
    report.error = e.what();
    report.error_is_bound = true;
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  return report;
}

std::vector<AmbiguityReport> run_proposition_check(const std::vector<std::string>& types,
                                                   const CheckOptions& options) {
  std::vector<AmbiguityReport> out(types.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(types.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < types.size(); i = next++) out[i] = check_type(types[i], options);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<std::string> default_check_types(bool include_e6) {
  std::vector<std::string> out;
  for (int n = 1; n <= 7; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) out.push_back("D" + std::to_string(n));
  out.insert(out.end(), {"G2", "F4", "H3", "H4"});
  for (int m = 5; m <= 12; ++m) out.push_back("I2(" + std::to_string(m) + ")");
  if (include_e6) out.push_back("E6");
  return out;
}

bool reducible_factor_check(const CharacterTable& table) {
  const CoxeterGroup& W = *table.group;
  const auto& comps = W.datum().components();
  if (comps.size() < 2) return true;
  const auto pairs = pairs_equal_on_proper_parabolics(table);
  if (pairs.empty()) return true;
  for (const auto& comp : comps) {
    const auto sub = parabolic_subgroup(W, comp.generators);
    const auto fusion = class_fusion(sub, W);
    for (const auto& [i, j] : pairs)
      if (restrict(table.irreducibles[i], fusion) != restrict(table.irreducibles[j], fusion)) return false;
  }
  return true;
}

}  // namespace weylhc
