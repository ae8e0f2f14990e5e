#include "weylhc/chartab.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "chartab_internal.hpp"
#include "weylhc/error.hpp"

namespace weylhc {

namespace detail {

namespace {

// A component whose characters come from a fully computed table of the
// standard group of that type (dihedral and exceptional components).
class TableComponent : public ComponentCharacters {
 public:
  explicit TableComponent(CharacterTable table) : table_(std::move(table)) { labels_ = table_.universal_labels; }
  std::vector<Cyclotomic> values(const std::vector<int>& word) const override {
    const int k = table_.group->class_of(table_.group->from_word(word));
    std::vector<Cyclotomic> out;
    out.reserve(table_.size());
    for (const auto& row : table_.irreducibles) out.push_back(row[k]);
    return out;
  }

 private:
  CharacterTable table_;
};

std::shared_ptr<const CoxeterGroup> standard_group(const CartanComponent& c) {
  return std::make_shared<const CoxeterGroup>(
      CoxeterGroup::enumerate(RootDatum::from_type(CartanType({c})), CoxeterGroup::kHardCap));
}

CharacterTable dihedral_table(std::shared_ptr<const CoxeterGroup> W, int m) {
  std::vector<std::string> names;
  auto rows = dihedral_rows(*W, m, names);
  return assemble(std::move(W), std::move(rows), {});
}

CharacterTable generic_table(std::shared_ptr<const CoxeterGroup> W) {
  auto rows = generic_irreducibles(*W);
  CharacterTable t = assemble(std::move(W), std::move(rows), {});
  if (!check_orthogonality(t).ok())
    throw InternalError("generic character table failed orthogonality for W(" + t.group->datum().type().to_string() +
                        ")");
  return t;
}

std::shared_ptr<const ComponentCharacters> component_characters(const CartanComponent& c) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const ComponentCharacters>> cache;
  const std::string key = c.to_string();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::shared_ptr<const ComponentCharacters> made;
  switch (c.family) {
    case Family::A: made = symmetric_component(c.rank); break;
    case Family::B:
    case Family::C: made = hyperoctahedral_component(c.rank); break;
    case Family::D: made = demihyperoctahedral_component(c.rank); break;
    case Family::G: made = std::make_shared<TableComponent>(dihedral_table(standard_group(c), 6)); break;
    case Family::I: made = std::make_shared<TableComponent>(dihedral_table(standard_group(c), c.m)); break;
    case Family::E:
    case Family::F:
    case Family::H: made = std::make_shared<TableComponent>(generic_table(standard_group(c))); break;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, made).first->second;
}

Rational rational_or_throw(const Cyclotomic& x, const char* what) {
  if (!x.is_rational()) throw InternalError(std::string(what) + " is not rational: " + x.to_string());
  return x.rational();
}

}  // namespace

CharacterTable assemble(std::shared_ptr<const CoxeterGroup> W, std::vector<ClassFunction> rows,
                        std::vector<std::string> labels) {
  const std::size_t r = W->conjugacy_classes().size();
  if (rows.size() != r) throw InternalError("number of characters differs from the number of classes");
  const auto terms = molien_class_terms(*W);
  std::vector<Poly> fake(rows.size());
  std::vector<int> b(rows.size());
  std::vector<Integer> deg(rows.size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    CyclotomicPoly acc;
    for (std::size_t k = 0; k < r; ++k)
      acc += terms[k] * (rows[x][k] * Cyclotomic(static_cast<long>(W->conjugacy_classes()[k].size)));
    const Rational inv_order(1, static_cast<unsigned long>(W->size()));
    for (const auto& [e, c] : acc.terms()) fake[x].set(e, rational_or_throw(c, "fake degree coefficient") * inv_order);
    if (fake[x].is_zero()) throw InternalError("zero fake degree");
    b[x] = fake[x].valuation();
    const Rational d = rational_or_throw(rows[x][0], "character degree");
    deg[x] = d.get_num();
  }
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (deg[x] != deg[y]) return deg[x] < deg[y];
    if (b[x] != b[y]) return b[x] < b[y];
    for (std::size_t k = 0; k < r; ++k) {
      const auto c = compare(rows[x][k], rows[y][k]);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    }
    return false;
  });
  CharacterTable t;
  t.group = std::move(W);
  for (std::size_t x : order) {
    t.irreducibles.push_back(std::move(rows[x]));
    t.fake_degrees.push_back(std::move(fake[x]));
    t.b_invariants.push_back(b[x]);
    if (!labels.empty()) t.labels.push_back(labels[x]);
  }
  for (std::size_t x = 0; x < t.size();) {
    std::size_t y = x;
    const Integer d = t.degree(x);
    while (y < t.size() && t.degree(y) == d && t.b_invariants[y] == t.b_invariants[x]) ++y;
    for (std::size_t z = x; z < y; ++z) {
      std::string s = "phi_{" + d.get_str() + "," + std::to_string(t.b_invariants[x]) + "}";
      if (y - x > 1) s += std::string(z - x + 1, '\'');
      t.universal_labels.push_back(std::move(s));
    }
    x = y;
  }
  if (labels.empty()) t.labels = t.universal_labels;
  return t;
}

}  // namespace detail

Integer CharacterTable::degree(std::size_t chi) const { return irreducibles.at(chi)[0].rational().get_num(); }

std::optional<std::size_t> CharacterTable::find(const std::string& label) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (labels[i] == label || universal_labels[i] == label) return i;
  return std::nullopt;
}

std::size_t CharacterTable::trivial() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (std::all_of(irreducibles[i].begin(), irreducibles[i].end(), [](const Cyclotomic& v) { return is_one(v); }))
      return i;
  throw InternalError("table has no trivial character");
}

std::size_t CharacterTable::sign() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < classes().size() && ok; ++k) {
      const int l = group->length(classes()[k].representative);
      ok = irreducibles[i][k] == Cyclotomic(l % 2 == 0 ? 1 : -1);
    }
    if (ok) return i;
  }
  throw InternalError("table has no sign character");
}

CharacterTable character_table(std::shared_ptr<const CoxeterGroup> W) {
  const auto& comps = W->datum().components();
  std::vector<std::shared_ptr<const detail::ComponentCharacters>> chars;
  // generator of W -> (component, standard index)
  std::vector<std::pair<int, int>> where(W->rank());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    chars.push_back(detail::component_characters(comps[c].type));
    for (std::size_t k = 0; k < comps[c].generators.size(); ++k)
      where[comps[c].generators[k]] = {static_cast<int>(c), static_cast<int>(k)};
  }
  const auto& classes = W->conjugacy_classes();
  const std::size_t r = classes.size();
  // vals[c][k] = values of component c's characters at the projection of class k.
  std::vector<std::vector<std::vector<Cyclotomic>>> vals(comps.size(), std::vector<std::vector<Cyclotomic>>(r));
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<std::vector<int>> words(comps.size());
    for (int g : W->word(classes[k].representative)) words[where[g].first].push_back(where[g].second);
    for (std::size_t c = 0; c < comps.size(); ++c) vals[c][k] = chars[c]->values(words[c]);
  }
  std::vector<ClassFunction> rows;
  std::vector<std::string> labels;
  std::size_t total = 1;
  for (const auto& ch : chars) total *= ch->labels().size();
  std::vector<std::size_t> idx(comps.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    for (std::size_t c = comps.size(); c-- > 0;) {
      idx[c] = rest % chars[c]->labels().size();
      rest /= chars[c]->labels().size();
    }
    ClassFunction row(r, Cyclotomic(1));
    std::string label = comps.empty() ? "1" : "";
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (std::size_t k = 0; k < r; ++k) row[k] *= vals[c][k][idx[c]];
      if (c) label += " x ";
      label += chars[c]->labels()[idx[c]];
    }
    rows.push_back(std::move(row));
    labels.push_back(std::move(label));
  }
  return detail::assemble(std::move(W), std::move(rows), std::move(labels));
}

namespace {

std::shared_ptr<const CoxeterGroup> standard(const std::string& type) {
  return std::make_shared<const CoxeterGroup>(CoxeterGroup::enumerate(RootDatum::from_type(CartanType::parse(type))));
}

}  // namespace

CharacterTable char_table_symmetric(int n) {
  if (n < 1 || n > 11) throw InvalidType("symmetric group tables need 1 <= n <= 11");
  return character_table(standard("A" + std::to_string(n)));
}

CharacterTable char_table_hyperoctahedral(int n) {
  if (n < 2) throw InvalidType("hyperoctahedral tables need n >= 2");
  return character_table(standard("B" + std::to_string(n)));
}

CharacterTable char_table_demihyperoctahedral(int n) {
  if (n < 3) throw InvalidType("type D tables need n >= 3");
  return character_table(standard("D" + std::to_string(n)));
}

CharacterTable char_table_dihedral(int m) {
  if (m < 3) throw InvalidType("dihedral tables need m >= 3");
  return detail::dihedral_table(standard("I2(" + std::to_string(m) + ")"), m);
}

CharacterTable char_table_generic(std::shared_ptr<const CoxeterGroup> W) { return detail::generic_table(std::move(W)); }

std::vector<CyclotomicPoly> molien_class_terms(const CoxeterGroup& W) {
  CyclotomicPoly numerator(1L);
  for (int d : W.degrees()) numerator *= CyclotomicPoly(1L) - CyclotomicPoly::q(d);
  const int n = W.rank();
  std::vector<CyclotomicPoly> out;
  for (const auto& cls : W.conjugacy_classes()) {
    const auto cp = characteristic_polynomial(W.reflection_matrix(cls.representative));
    // det(1 - qM) = q^n charpoly(1/q)
    CyclotomicPoly den;
    for (const auto& [e, c] : cp.terms()) den.set(n - e, c);
    auto quot = numerator.exact_div(den);
    if (!quot) throw InternalError("det(1 - qw) does not divide the degree product");
    out.push_back(std::move(*quot));
  }
  return out;
}

Poly fake_degree(const CoxeterGroup& W, const ClassFunction& chi) {
  const auto terms = molien_class_terms(W);
  CyclotomicPoly acc;
  for (std::size_t k = 0; k < terms.size(); ++k)
    acc += terms[k] * (chi[k] * Cyclotomic(static_cast<long>(W.conjugacy_classes()[k].size)));
  Poly out;
  const Rational inv_order(1, static_cast<unsigned long>(W.size()));
  for (const auto& [e, c] : acc.terms()) out.set(e, detail::rational_or_throw(c, "fake degree coefficient") * inv_order);
  return out;
}

std::vector<int> class_fusion(const ParabolicSubgroup& sub, const CoxeterGroup& sup) {
  std::vector<int> out;
  for (const auto& cls : sub.group.conjugacy_classes()) {
    if (cls.representative >= sub.embedding.size()) throw InternalError("parabolic embedding is incomplete");
    out.push_back(sup.class_of(sub.embedding[cls.representative]));
  }
  return out;
}

ClassFunction restrict(const ClassFunction& chi, const std::vector<int>& fusion) {
  ClassFunction out;
  out.reserve(fusion.size());
  for (int k : fusion) out.push_back(chi.at(k));
  return out;
}

ClassFunction induce(const ClassFunction& phi, const CoxeterGroup& sub, const CoxeterGroup& sup,
                     const std::vector<int>& fusion) {
  const auto& sup_classes = sup.conjugacy_classes();
  const auto& sub_classes = sub.conjugacy_classes();
  ClassFunction out(sup_classes.size(), Cyclotomic(0));
  for (std::size_t c = 0; c < sub_classes.size(); ++c)
    out[fusion[c]] += phi[c] * Cyclotomic(static_cast<long>(sub_classes[c].size));
  for (std::size_t k = 0; k < sup_classes.size(); ++k) {
    if (out[k].is_zero()) continue;
    out[k] *= Cyclotomic(fraction(Integer(static_cast<unsigned long>(sup.size())),
                                  Integer(static_cast<unsigned long>(sub.size() * sup_classes[k].size))));
  }
  return out;
}

Rational inner_product(const CoxeterGroup& W, const ClassFunction& chi, const ClassFunction& psi) {
  Cyclotomic acc(0);
  const auto& classes = W.conjugacy_classes();
  for (std::size_t k = 0; k < classes.size(); ++k)
    acc += chi[k] * psi[k].conj() * Cyclotomic(static_cast<long>(classes[k].size));
  const Rational v = detail::rational_or_throw(acc, "inner product");
  return v / Rational(static_cast<unsigned long>(W.size()));
}

std::vector<Rational> decompose(const CharacterTable& table, const ClassFunction& phi) {
  std::vector<Rational> out;
  for (const auto& chi : table.irreducibles) out.push_back(inner_product(*table.group, phi, chi));
  return out;
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
  OrthogonalityReport rep;
  const auto& W = *t.group;
  const std::size_t r = t.classes().size();
  rep.rows = t.size() == r;
  for (std::size_t x = 0; x < t.size() && rep.rows; ++x)
    for (std::size_t y = x; y < t.size() && rep.rows; ++y)
      rep.rows = inner_product(W, t.irreducibles[x], t.irreducibles[y]) == (x == y ? 1 : 0);
  rep.columns = t.size() == r;
  for (std::size_t k = 0; k < r && rep.columns; ++k)
    for (std::size_t l = k; l < r && rep.columns; ++l) {
      Cyclotomic acc(0);
      for (const auto& chi : t.irreducibles) acc += chi[k] * chi[l].conj();
      const Cyclotomic expected =
          k == l ? Cyclotomic(fraction(Integer(static_cast<unsigned long>(W.size())),
                                         Integer(static_cast<unsigned long>(t.class_size(k)))))
                 : Cyclotomic(0);
      rep.columns = acc == expected;
    }
  Integer sum = 0;
  for (std::size_t x = 0; x < t.size(); ++x) sum += t.degree(x) * t.degree(x);
  rep.degree_sum = sum == W.order();
  return rep;
}

bool same_rows_up_to_permutation(const std::vector<ClassFunction>& a, const std::vector<ClassFunction>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& row : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && b[j] == row) {
        used[j] = true;
        found = true;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace weylhc
