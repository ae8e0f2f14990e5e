#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace weylhc::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

Json class_list(const CharacterTable& table) {
  const CoxeterGroup& W = *table.group;
  Json classes = Json::array();
  for (const auto& c : table.classes())
    classes.push_back({{"representative", W.word_string(c.representative)},
                       {"size", str(c.size)},
                       {"element_order", str(W.element_order(c.representative))}});
  return classes;
}

Json J_json(const std::vector<int>& J) {
  Json out = Json::array();
  for (int j : J) out.push_back(str(j + 1));
  return out;
}

std::string J_string(const std::vector<int>& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + str(J[i] + 1);
  return s + "}";
}

std::string factored(const CyclotomicPoly& p) {
  const auto f = SchurElement{"", "", p}.factorization();
  return f ? f->to_unicode() : "";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string chartab_json(const CharacterTable& table) {
  const CoxeterGroup& W = *table.group;
  Json chars = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : table.irreducibles[i]) values.push_back(v.to_string());
    chars.push_back({{"label", table.labels[i]},
                     {"universal_label", table.universal_labels[i]},
                     {"degree", table.degree(i).get_str()},
                     {"b_invariant", str(table.b_invariants[i])},
                     {"fake_degree", table.fake_degrees[i].to_string()},
                     {"values", values}});
  }
  return dump({{"format", "chartab-v1"},
               {"type", W.datum().type().to_string()},
               {"order", W.order().get_str()},
               {"classes", class_list(table)},
               {"characters", chars}});
}

std::string chartab_tsv(const CharacterTable& table) {
  const CoxeterGroup& W = *table.group;
  std::ostringstream os;
  os << "character";
  for (const auto& c : table.classes()) os << '\t' << W.word_string(c.representative);
  os << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    os << table.labels[i];
    for (const auto& v : table.irreducibles[i]) os << '\t' << v.to_string();
    os << '\n';
  }
  return os.str();
}

std::string chartab_text(const CharacterTable& table) {
  const CoxeterGroup& W = *table.group;
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"class"});
  cells.push_back({"size"});
  for (const auto& c : table.classes()) {
    cells[0].push_back(W.word_string(c.representative));
    cells[1].push_back(str(c.size));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<std::string> row{table.labels[i]};
    for (const auto& v : table.irreducibles[i]) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  os << "W(" << W.datum().type().to_string() << "), order " << W.order().get_str() << "\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) line += (c ? "  " : "") + pad(row[c], width[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string report_json(const std::vector<AmbiguityReport>& reports, const CheckOptions& options) {
  Json list = Json::array();
  for (const auto& r : reports) {
    Json pairs = Json::array();
    for (std::size_t p = 0; p < r.pairs.size(); ++p) {
      const auto& s = r.pairs[p];
      Json entry{{"first", s.first_label},
                 {"second", s.second_label},
                 {"verdict", to_string(s.verdict)},
                 {"note", s.note}};
      if (s.first_witness && s.second_witness)
      {
        entry["witnesses"] = {s.first_witness->to_string(), s.second_witness->to_string()};
        entry["witness_factorizations"] = {factored(*s.first_witness), factored(*s.second_witness)};
      }
      if (p < r.restrictions.size()) {
        Json res = Json::array();
        for (const auto& rec : r.restrictions[p]) {
          Json cons = Json::array();
          for (const auto& [label, mult] : rec.constituents)
            cons.push_back({{"label", label}, {"multiplicity", mult.get_str()}});
          res.push_back({{"J", J_json(rec.J)}, {"constituents", cons}});
        }
        entry["restrictions"] = res;
      }
      pairs.push_back(entry);
    }
    Json item{{"type", r.type},
              {"computed", r.computed},
              {"expectation", r.expectation},
              {"matches_expectation", r.matches_expectation},
              {"pairs", pairs}};
    if (r.exceptional)
      item["exceptional_family"] = {{"type", r.exceptional->type},
                                    {"dimension", str(r.exceptional->dimension)},
                                    {"citation", r.exceptional->citation}};
    if (!r.error.empty()) item["error"] = r.error;
    list.push_back(item);
  }
  Json params = Json::object();
  params["bound"] = str(options.bound);
  if (options.k) params["k"] = str(*options.k);
  params["include_e6"] = options.include_e6;
  return dump({{"format", "hcreport-v1"}, {"options", params}, {"reports", list}});
}

std::string report_tsv(const std::vector<AmbiguityReport>& reports) {
  std::ostringstream os;
  os << "type\tfirst\tsecond\tverdict\tfirst_witness\tsecond_witness\tmatches_expectation\n";
  for (const auto& r : reports) {
    const std::string match = r.matches_expectation ? "true" : "false";
    if (r.pairs.empty()) {
      std::string verdict = r.exceptional ? "documented-exception" : r.error.empty() ? "none" : "error";
      os << r.type << "\t\t\t" << verdict << "\t\t\t" << match << '\n';
    }
    for (const auto& s : r.pairs)
      os << r.type << '\t' << s.first_label << '\t' << s.second_label << '\t' << to_string(s.verdict) << '\t'
         << (s.first_witness ? s.first_witness->to_string() : "") << '\t'
         << (s.second_witness ? s.second_witness->to_string() : "") << '\t' << match << '\n';
  }
  return os.str();
}

std::string report_text(const std::vector<AmbiguityReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.type << ": ";
    if (r.exceptional)
      os << "documented exceptional family of dimension " << r.exceptional->dimension << " ("
         << r.exceptional->citation << ")";
    else if (!r.computed)
      os << "not computed: " << r.error;
    else
      os << r.pairs.size() << (r.pairs.size() == 1 ? " pair" : " pairs");
    os << (r.matches_expectation ? " [expected]" : " [UNEXPECTED]") << '\n';
    for (std::size_t p = 0; p < r.pairs.size(); ++p) {
      const auto& s = r.pairs[p];
      os << "  {" << s.first_label << ", " << s.second_label << "}: " << to_string(s.verdict);
      if (!s.note.empty()) os << " (" << s.note << ")";
      os << '\n';
      if (s.first_witness && s.second_witness)
        os << "    c = " << factored(*s.first_witness) << "\n    c' = " << factored(*s.second_witness) << '\n';
      if (p < r.restrictions.size())
        for (const auto& rec : r.restrictions[p]) {
          os << "    J = " << J_string(rec.J) << ":";
          for (const auto& [label, mult] : rec.constituents) os << ' ' << mult.get_str() << '*' << label;
          os << '\n';
        }
    }
  }
  return os.str();
}

}  // namespace weylhc::cli
