#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "weylhc/error.hpp"

namespace weylhc::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_bound(const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 1) throw InvalidType("");
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw InvalidType("bound must be a positive integer, got '" + text + "'");
  }
}

int parse_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw InvalidType("");
    return v;
  } catch (const std::exception&) {
    throw InvalidType(key + " must be an integer, got '" + text + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw InvalidType(key + " must be true or false, got '" + text + "'");
}

std::shared_ptr<const CoxeterGroup> group_for(const std::string& type, std::uint64_t bound) {
  return std::make_shared<const CoxeterGroup>(
      CoxeterGroup::enumerate(RootDatum::from_type(CartanType::parse(type)), bound));
}

const std::string& single_type(const RunConfig& config) {
  if (config.types.size() != 1) throw InvalidType("expected exactly one type");
  return config.types.front();
}

void check_k(const RunConfig& config, bool g2) {
  if (!config.k) return;
  if (*config.k < 1) throw InvalidType("k must be positive");
  if (g2 && *config.k != 1 && *config.k != 2 && *config.k != 5) throw InvalidType("k must be 1, 2 or 5 for G2");
}

bool is_g2(const std::string& type) {
  const auto t = CartanType::parse(type).to_string();
  return t == "G2" || t == "I2(6)";
}

int emit(const RunConfig& config, const std::string& content, std::ostream& out, std::ostream& err) {
  if (config.out.empty()) {
    out << content;
    return kOk;
  }
  std::ofstream file(config.out, std::ios::binary);
  file << content;
  if (!file) {
    err << "error: cannot write " << config.out << '\n';
    return kBadInput;
  }
  return kOk;
}

std::string J_text(const std::vector<int>& J) {
  std::string s;
  for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i] + 1);
  return s;
}

Json J_json(const std::vector<int>& J) {
  Json out = Json::array();
  for (int j : J) out.push_back(std::to_string(j + 1));
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Display width of UTF-8 text: one column per code point.
std::size_t columns(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

// Table rows with their column names, emitted as TSV or aligned text.
std::string rows_out(Format f, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  if (f == Format::Tsv) {
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "\t" : "") << header[c];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "\t" : "") << r[c];
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = columns(header[c]);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], columns(r[c]));
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += (c ? "  " : "") + r[c];
      if (c + 1 < r.size()) s += std::string(width[c] - columns(r[c]), ' ');
    }
    os << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  if (s == "text") return Format::Text;
  throw InvalidType("format must be json, tsv or text, got '" + s + "'");
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  static const std::set<std::string> known{"bound",      "format",  "k", "include-e6", "restriction-vectors",
                                           "threads",    "out"};
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidType("config line " + std::to_string(number) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (!known.count(key)) throw InvalidType("config line " + std::to_string(number) + ": unknown key '" + key + "'");
    out[key] = value;
  }
  return out;
}

void apply_config(RunConfig& config, const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "bound") config.bound = parse_bound(value);
    else if (key == "format") config.format = parse_format(value);
    else if (key == "k") config.k = parse_int(key, value);
    else if (key == "include-e6") config.include_e6 = parse_bool(key, value);
    else if (key == "restriction-vectors") config.restriction_vectors = parse_bool(key, value);
    else if (key == "threads") config.threads = static_cast<unsigned>(std::max(0, parse_int(key, value)));
    else if (key == "out") config.out = value;
    else throw InvalidType("unknown config key '" + key + "'");
  }
}

std::vector<int> parse_J(const std::string& text, int rank) {
  std::vector<int> J;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    int v = 0;
    try {
      v = parse_int("J", item);
    } catch (const InvalidType&) {
      throw DomainError("J: '" + item + "' is not a generator index");
    }
    if (v < 1 || v > rank)
      throw DomainError("J: index " + item + " out of range 1.." + std::to_string(rank));
    if (std::find(J.begin(), J.end(), v - 1) != J.end()) throw DomainError("J: index " + item + " repeated");
    J.push_back(v - 1);
  }
  std::sort(J.begin(), J.end());
  return J;
}

std::vector<Table1Cell> table1_cells(const std::optional<int>& k) {
  auto product = [](long scalar, std::map<int, int> factors) {
    CyclotomicProduct c;
    c.scalar = scalar;
    c.factors = std::move(factors);
    return c;
  };
  // Rows k = 1, 2, 5; columns b = 1, 2.
  const std::vector<Table1Cell> claims{
      {1, 1, product(3, {{6, 1}}), {}},
      {1, 2, product(1, {{3, 1}}), {}},
      {2, 1, product(1, {{3, 1}, {12, 1}}), {}},
      {2, 2, product(1, {{3, 1}, {6, 2}}), {}},
      {5, 1, product(1, {{3, 1}, {6, 2}, {12, 1}, {30, 1}}), {}},
      {5, 2, product(1, {{3, 1}, {15, 1}, {24, 1}}), {}},
  };
  std::vector<Table1Cell> out;
  for (auto cell : claims) {
    if (k && cell.k != *k) continue;
    const Poly expanded = cyclotomic(3).substitute_power(cell.k + cell.b - 2) *
                          cyclotomic(6).substitute_power(cell.k - cell.b + 1);
    cell.computed = factor_into_cyclotomics(expanded);
    out.push_back(std::move(cell));
  }
  return out;
}

int cmd_chartab(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto table = character_table(group_for(single_type(config), config.bound));
  switch (config.format) {
    case Format::Json: return emit(config, chartab_json(table), out, err);
    case Format::Tsv: return emit(config, chartab_tsv(table), out, err);
    case Format::Text: return emit(config, chartab_text(table), out, err);
  }
  return kOk;
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto types = config.types.empty() ? default_check_types(config.include_e6) : config.types;
  bool any_g2 = false;
  for (const auto& t : types) any_g2 = any_g2 || is_g2(t);  // also validates every type
  check_k(config, any_g2);
  CheckOptions options;
  options.bound = config.bound;
  options.k = config.k;
  options.include_e6 = config.include_e6;
  options.restriction_vectors = config.restriction_vectors;
  options.threads = config.threads;
  const auto reports = run_proposition_check(types, options);
  std::string body;
  switch (config.format) {
    case Format::Json: body = report_json(reports, options); break;
    case Format::Tsv: body = report_tsv(reports); break;
    case Format::Text: body = report_text(reports); break;
  }
  if (const int rc = emit(config, body, out, err); rc != kOk) return rc;
  int code = kOk;
  for (const auto& r : reports) {
    if (r.error_is_bound) {
      err << "error: " << r.type << ": " << r.error << '\n';
      code = kBoundExceeded;
    } else if (!r.matches_expectation) {
      err << r.type << ": unexpected " << (r.error.empty() ? "ambiguity" : "error: " + r.error) << '\n';
      if (code == kOk) code = kMismatch;
    } else if (!r.computed && !r.exceptional) {
      err << r.type << ": skipped: " << r.error << '\n';
    }
  }
  return code;
}

int cmd_table1(const RunConfig& config, std::ostream& out, std::ostream& err) {
  check_k(config, true);
  const auto cells = table1_cells(config.k);
  bool all = true;
  Json rows = Json::array();
  std::vector<std::vector<std::string>> table;
  for (const auto& c : cells) {
    all = all && c.match();
    const std::string claimed = c.claimed.to_unicode();
    const std::string computed = c.computed ? c.computed->to_unicode() : "(not a cyclotomic product)";
    const std::string identity = claimed + " = " + computed;
    rows.push_back({{"k", std::to_string(c.k)},
                    {"b", std::to_string(c.b)},
                    {"claimed", claimed},
                    {"computed", computed},
                    {"identity", identity},
                    {"match", c.match()}});
    table.push_back({std::to_string(c.k), std::to_string(c.b), identity, c.match() ? "ok" : "MISMATCH"});
  }
  std::string body;
  if (config.format == Format::Json)
    body = dump({{"format", "table1-v1"}, {"rows", rows}, {"all_match", all}});
  else
    body = rows_out(config.format, {"k", "b", "claimed = computed", "status"}, table);
  if (const int rc = emit(config, body, out, err); rc != kOk) return rc;
  if (!all) err << "error: factorisation table mismatch\n";
  return all ? kOk : kMismatch;
}

int cmd_relative_weyl(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto W = group_for(single_type(config), config.bound);
  if (!config.J) throw DomainError("relweyl needs --J");
  for (int j : *config.J)
    if (j < 0 || j >= W->rank()) throw DomainError("J index out of range for " + W->datum().type().to_string());
  const auto rel = relative_weyl_group(*W, *config.J);
  const auto split = normalizer_splitting_check(*W, *config.J);
  if (config.format == Format::Json) {
    Json complement = Json::array();
    for (Elem e : split.section) complement.push_back(W->word_string(e));
    return emit(config,
                dump({{"format", "relweyl-v1"},
                      {"type", W->datum().type().to_string()},
                      {"J", J_json(rel.J)},
                      {"parabolic_order", std::to_string(rel.parabolic_order)},
                      {"normalizer_order", std::to_string(rel.normalizer_order)},
                      {"quotient_order", std::to_string(rel.order())},
                      {"splits", split.splits},
                      {"complement", complement}}),
                out, err);
  }
  std::string section;
  for (Elem e : split.section) section += (section.empty() ? "" : " ") + W->word_string(e);
  return emit(config,
              rows_out(config.format, {"field", "value"},
                       {{"type", W->datum().type().to_string()},
                        {"J", J_text(rel.J)},
                        {"|W_J|", std::to_string(rel.parabolic_order)},
                        {"|N_W(W_J)|", std::to_string(rel.normalizer_order)},
                        {"quotient order", std::to_string(rel.order())},
                        {"splits", split.splits ? "true" : "false"},
                        {"complement", section}}),
              out, err);
}

int cmd_schur(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string& type = single_type(config);
  check_k(config, is_g2(type));
  const auto table = character_table(group_for(type, config.bound));
  const HeckeParams params = default_params(*table.group, config.k.value_or(1));
  const auto schur = schur_elements(table, params);
  Json items = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : schur) {
    const auto f = s.factorization();
    const std::string factored = f ? f->to_unicode() : "";
    items.push_back({{"label", s.label},
                     {"universal_label", s.universal_label},
                     {"schur_element", s.value.to_string()},
                     {"factorization", factored}});
    rows.push_back({s.label, s.universal_label, s.value.to_string(), factored});
  }
  if (config.format == Format::Json)
    return emit(config,
                dump({{"format", "schur-v1"},
                      {"type", table.group->datum().type().to_string()},
                      {"parameters", params.to_string()},
                      {"elements", items}}),
                out, err);
  return emit(config, rows_out(config.format, {"label", "universal", "schur element", "factorization"}, rows), out,
              err);
}

int cmd_fakedeg(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto table = character_table(group_for(single_type(config), config.bound));
  Json items = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : fake_degrees(table)) {
    items.push_back({{"label", f.label},
                     {"universal_label", f.universal_label},
                     {"b_invariant", std::to_string(f.b_invariant)},
                     {"fake_degree", f.polynomial.to_string()}});
    rows.push_back({f.label, f.universal_label, std::to_string(f.b_invariant), f.polynomial.to_string()});
  }
  if (config.format == Format::Json)
    return emit(config,
                dump({{"format", "fakedeg-v1"},
                      {"type", table.group->datum().type().to_string()},
                      {"fake_degrees", items}}),
                out, err);
  return emit(config, rows_out(config.format, {"label", "universal", "b", "fake degree"}, rows), out, err);
}

int cmd_restrict(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto W = group_for(single_type(config), config.bound);
  if (!config.J) throw DomainError("restrict needs --J");
  for (int j : *config.J)
    if (j < 0 || j >= W->rank()) throw DomainError("J index out of range for " + W->datum().type().to_string());
  const auto table = character_table(W);
  auto sub = parabolic_subgroup(*W, *config.J);
  const auto fusion = class_fusion(sub, *W);
  const std::string sub_type = sub.group.datum().type().to_string();
  const auto sub_table = character_table(std::make_shared<const CoxeterGroup>(std::move(sub.group)));
  Json items = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto mult = decompose(sub_table, restrict(table.irreducibles[i], fusion));
    Json cons = Json::array();
    std::string text;
    for (std::size_t c = 0; c < mult.size(); ++c) {
      if (mult[c] == 0) continue;
      cons.push_back({{"label", sub_table.labels[c]}, {"multiplicity", mult[c].get_str()}});
      text += (text.empty() ? "" : " + ") + (mult[c] == 1 ? "" : mult[c].get_str() + "*") + sub_table.labels[c];
    }
    items.push_back({{"label", table.labels[i]}, {"constituents", cons}});
    rows.push_back({table.labels[i], text});
  }
  if (config.format == Format::Json)
    return emit(config,
                dump({{"format", "restrict-v1"},
                      {"type", W->datum().type().to_string()},
                      {"J", J_json(sub.J)},
                      {"parabolic_type", sub_type},
                      {"restrictions", items}}),
                out, err);
  return emit(config, rows_out(config.format, {"character", "restriction to W_J = " + sub_type}, rows), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_bound) {
  CLI::App app{"Finite Coxeter group characters, Schur elements and Harish-Chandra pair checks", "weylhc"};
  app.require_subcommand(1);

  std::vector<std::string> types;
  std::optional<std::string> format, out_path, bound, J, config_file;
  std::optional<int> k;
  bool include_e6 = false, restriction_vectors = false;
  std::optional<unsigned> threads;

  auto common = [&](CLI::App* sub, bool many_types) {
    if (many_types)
      sub->add_option("types", types, "Cartan types, e.g. A3 B2 G2 I2(5) A2xA1");
    else
      sub->add_option("type", types, "Cartan type, e.g. G2")->expected(1);
    sub->add_option("--format", format, "json, tsv or text");
    sub->add_option("--out", out_path, "Output file (default stdout)");
    sub->add_option("--bound", bound, "Enumeration bound on |W|");
    sub->add_option("--config", config_file, "key = value file, lowest precedence");
  };
  auto* chartab = app.add_subcommand("chartab", "Character table");
  common(chartab, false);
  auto* check = app.add_subcommand("check", "Pairs of characters equal on every proper parabolic subgroup");
  common(check, true);
  check->add_option("--k", k, "Hecke parameter exponent");
  check->add_flag("--include-e6", include_e6, "Admit E6 (slow)");
  check->add_flag("--restriction-vectors", restriction_vectors, "Emit restrictions of each pair");
  check->add_option("--threads", threads, "Concurrent types (0: hardware)");
  auto* table1 = app.add_subcommand("table1", "Verify the G2 cyclotomic factorisations");
  table1->add_option("--k", k, "Only the row for this k");
  table1->add_option("--format", format, "json, tsv or text");
  table1->add_option("--out", out_path, "Output file (default stdout)");
  table1->add_option("--config", config_file, "key = value file, lowest precedence");
  auto* relweyl = app.add_subcommand("relweyl", "Relative Weyl group N_W(W_J)/W_J");
  common(relweyl, false);
  relweyl->add_option("--J", J, "1-based generator indices, e.g. 1,3")->required();
  auto* schur = app.add_subcommand("schur", "Schur elements (A1 and rank-2 types)");
  common(schur, false);
  schur->add_option("--k", k, "Hecke parameter exponent");
  auto* fakedeg = app.add_subcommand("fakedeg", "Fake degrees and b-invariants");
  common(fakedeg, false);
  auto* restrict_cmd = app.add_subcommand("restrict", "Restrictions of the irreducibles to W_J");
  common(restrict_cmd, false);
  restrict_cmd->add_option("--J", J, "1-based generator indices, e.g. 1,2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return e.get_exit_code() == 0 ? kOk : kBadInput;
  }
  RunConfig config;
  try {
    if (config_file) {
      std::ifstream in(*config_file);
      if (!in) throw InvalidType("cannot read config file " + *config_file);
      std::stringstream ss;
      ss << in.rdbuf();
      apply_config(config, parse_config_text(ss.str()));
    }
    if (env_bound && !env_bound->empty()) config.bound = parse_bound(*env_bound);
    config.types = types;
    if (format) config.format = parse_format(*format);
    if (out_path) config.out = *out_path;
    if (bound) config.bound = parse_bound(*bound);
    if (k) config.k = k;
    if (include_e6) config.include_e6 = true;
    if (restriction_vectors) config.restriction_vectors = true;
    if (threads) config.threads = *threads;
    if (J) {
      if (config.types.size() != 1) throw InvalidType("expected exactly one type");
      config.J = parse_J(*J, CartanType::parse(config.types.front()).rank());
    }
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "chartab") return cmd_chartab(config, out, err);
    if (name == "check") return cmd_check(config, out, err);
    if (name == "table1") return cmd_table1(config, out, err);
    if (name == "relweyl") return cmd_relative_weyl(config, out, err);
    if (name == "schur") return cmd_schur(config, out, err);
    if (name == "fakedeg") return cmd_fakedeg(config, out, err);
    if (name == "restrict") return cmd_restrict(config, out, err);
    err << "error: unknown command " << name << '\n';
    return kBadInput;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << " (enumeration bound " << config.bound << ")\n";
    return kBoundExceeded;
  } catch (const InvalidType& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const NotImplemented& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const char* env = std::getenv("WEYLHC_BOUND");
  return run(argc, argv, out, err, env ? std::optional<std::string>(env) : std::nullopt);
}

}  // namespace weylhc::cli
