#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "weylhc/chartab.hpp"
#include "weylhc/error.hpp"

using namespace weylhc;

namespace {

std::shared_ptr<const CoxeterGroup> shared_group(const std::string& t) {
  return std::make_shared<const CoxeterGroup>(CoxeterGroup::enumerate(RootDatum::from_type(CartanType::parse(t))));
}

CharacterTable table_of(const std::string& t) { return character_table(shared_group(t)); }

std::vector<long> sorted_degrees(const CharacterTable& t) {
  std::vector<long> d;
  for (std::size_t i = 0; i < t.size(); ++i) d.push_back(t.degree(i).get_si());
  std::sort(d.begin(), d.end());
  return d;
}

// Class of `tgt` containing the image of each class representative of `src`
// under the isomorphism sending generator i of src to generator gen_map[i].
std::vector<int> transport_classes(const CoxeterGroup& src, const CoxeterGroup& tgt, const std::vector<int>& gen_map) {
  std::vector<int> out;
  for (const auto& c : src.conjugacy_classes()) {
    std::vector<int> w;
    for (int g : src.word(c.representative)) w.push_back(gen_map[g]);
    out.push_back(tgt.class_of(tgt.from_word(w)));
  }
  return out;
}

// Rows of `a` with columns reordered to the class order of `b`.
bool isomorphic_tables(const CharacterTable& a, const CharacterTable& b, const std::vector<int>& gen_map) {
  const auto cls = transport_classes(*a.group, *b.group, gen_map);
  if (a.size() != b.size()) return false;
  std::vector<ClassFunction> moved(a.size(), ClassFunction(b.classes().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < cls.size(); ++k) moved[i][cls[k]] = a.irreducibles[i][k];
  return same_rows_up_to_permutation(moved, b.irreducibles);
}

ClassFunction constituent_sum(const CharacterTable& t, std::initializer_list<std::size_t> rows) {
  ClassFunction out(t.classes().size(), Cyclotomic(0));
  for (std::size_t r : rows)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += t.irreducibles[r][k];
  return out;
}

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) J.push_back(i);
    out.push_back(J);
  }
  return out;
}

}  // namespace

TEST_CASE("small tables") {
  const auto a1 = char_table_symmetric(1);
  REQUIRE(a1.size() == 2);
  CHECK(a1.irreducibles[a1.trivial()] == ClassFunction{Cyclotomic(1), Cyclotomic(1)});
  CHECK(a1.irreducibles[a1.sign()] == ClassFunction{Cyclotomic(1), Cyclotomic(-1)});
  CHECK(sorted_degrees(char_table_symmetric(2)) == std::vector<long>{1, 1, 2});
  CHECK(sorted_degrees(char_table_symmetric(3)) == std::vector<long>{1, 1, 2, 3, 3});
  CHECK(sorted_degrees(char_table_hyperoctahedral(2)) == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(char_table_hyperoctahedral(3).size() == 10);
  CHECK(char_table_demihyperoctahedral(4).size() == 13);
  CHECK(char_table_generic(shared_group("H3")).size() == 10);
  for (const auto& t : {char_table_hyperoctahedral(2), char_table_demihyperoctahedral(4)})
    for (const auto& v : t.irreducibles[t.trivial()]) CHECK(v == Cyclotomic(1));
}

TEST_CASE("dihedral tables") {
  for (int m = 3; m <= 12; ++m) {
    CAPTURE(m);
    const auto t = char_table_dihedral(m);
    std::vector<long> expected(m % 2 ? 2 : 4, 1);
    for (int j = 0; j < (m - 1) / 2; ++j) expected.push_back(2);
    CHECK(sorted_degrees(t) == expected);
    CHECK(check_orthogonality(t).ok());
  }
  const auto g2 = char_table_dihedral(6);
  CHECK(sorted_degrees(g2) == std::vector<long>{1, 1, 1, 1, 2, 2});
  REQUIRE(g2.find("phi_{2,1}"));
  REQUIRE(g2.find("phi_{2,2}"));
  CHECK(g2.degree(*g2.find("phi_{2,1}")) == 2);
  CHECK(g2.b_invariants[*g2.find("phi_{2,2}")] == 2);
}

TEST_CASE("orthogonality for every type") {
  for (const char* t : {"A1", "A4", "A5", "B4", "C3", "D5", "G2", "F4", "H3", "I2(5)", "I2(8)", "A1xA1", "B2xA2",
                        "A1xG2xA1", "H4", "E6"}) {
    const std::string name = t;
    CAPTURE(name);
    const auto tab = table_of(t);
    const auto rep = check_orthogonality(tab);
    CHECK(rep.rows);
    CHECK(rep.columns);
    CHECK(rep.degree_sum);
    CHECK(tab.size() == tab.classes().size());
  }
}

TEST_CASE("irrational values lie in the expected fields") {
  for (const char* t : {"A4", "B3", "D4", "F4", "G2", "I2(4)", "I2(6)"}) {
    for (const auto& row : table_of(t).irreducibles)
      for (const auto& v : row) CHECK(v.is_rational());
  }
  bool irrational = false;
  for (const auto& row : table_of("H3").irreducibles)
    for (const auto& v : row) {
      CHECK(v.is_real());
      CHECK(v.is_integral());
      irrational = irrational || !v.is_rational();
    }
  CHECK(irrational);
}

TEST_CASE("combinatorial tables agree with the generic algorithm") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const auto t = char_table_symmetric(n);
    CHECK(same_rows_up_to_permutation(t.irreducibles, char_table_generic(t.group).irreducibles));
  }
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto t = char_table_hyperoctahedral(n);
    CHECK(same_rows_up_to_permutation(t.irreducibles, char_table_generic(t.group).irreducibles));
  }
  for (int n = 3; n <= 5; ++n) {
    CAPTURE(n);
    const auto t = char_table_demihyperoctahedral(n);
    CHECK(same_rows_up_to_permutation(t.irreducibles, char_table_generic(t.group).irreducibles));
  }
  for (int m : {3, 4, 5, 6, 7, 8, 10, 12}) {
    CAPTURE(m);
    const auto t = char_table_dihedral(m);
    CHECK(same_rows_up_to_permutation(t.irreducibles, char_table_generic(t.group).irreducibles));
  }
  for (const char* t : {"C3", "A2xB2", "A1xI2(5)"}) {
    const std::string name = t;
    CAPTURE(name);
    const auto tab = table_of(t);
    CHECK(same_rows_up_to_permutation(tab.irreducibles, char_table_generic(tab.group).irreducibles));
  }
}

TEST_CASE("tables transported along exceptional isomorphisms") {
  // D3 is the diagram 2 - 1 - 3 of A3.
  CHECK(isomorphic_tables(char_table_demihyperoctahedral(3), char_table_symmetric(3), {1, 0, 2}));
  CHECK(isomorphic_tables(char_table_dihedral(3), char_table_symmetric(2), {0, 1}));
  CHECK(isomorphic_tables(char_table_dihedral(4), char_table_hyperoctahedral(2), {0, 1}));
  CHECK(isomorphic_tables(char_table_dihedral(6), table_of("G2"), {0, 1}));
  CHECK(isomorphic_tables(table_of("B3"), table_of("C3"), {0, 1, 2}));
}

TEST_CASE("labels") {
  const auto a2 = char_table_symmetric(2);
  REQUIRE(a2.find("[2,1]"));
  CHECK(a2.degree(*a2.find("[2,1]")) == 2);
  CHECK(*a2.find("[3]") == a2.trivial());
  CHECK(*a2.find("[1,1,1]") == a2.sign());
  const auto b2 = char_table_hyperoctahedral(2);
  CHECK(*b2.find("([2],[])") == b2.trivial());
  CHECK(*b2.find("([],[1,1])") == b2.sign());
  CHECK(b2.degree(*b2.find("([1],[1])")) == 2);
  const auto d4 = char_table_demihyperoctahedral(4);
  for (const char* l : {"{[2],[2]}+", "{[2],[2]}-", "{[1,1],[1,1]}+", "{[1,1],[1,1]}-"}) {
    REQUIRE(d4.find(l));
    CHECK(d4.degree(*d4.find(l)) == 3);
  }
  CHECK(d4.degree(*d4.find("{[2,1],[1]}")) == 8);
  const auto ab = table_of("B2xA1");
  REQUIRE(ab.find("([1],[1]) x [1,1]"));
  CHECK(ab.universal_labels[*ab.find("([1],[1]) x [1,1]")] == "phi_{2,2}");
  // Universal labels are distinct and carry (degree, b).
  for (const char* t : {"D4", "F4", "H3", "E6"}) {
    const auto tab = table_of(t);
    std::set<std::string> seen(tab.universal_labels.begin(), tab.universal_labels.end());
    CHECK(seen.size() == tab.size());
    for (std::size_t i = 0; i < tab.size(); ++i) {
      const std::string prefix = "phi_{" + tab.degree(i).get_str() + "," + std::to_string(tab.b_invariants[i]) + "}";
      CHECK(tab.universal_labels[i].rfind(prefix, 0) == 0);
    }
  }
}

TEST_CASE("rows are sorted and the order is reproducible") {
  for (const char* t : {"F4", "D4", "H3"}) {
    const auto a = table_of(t), b = table_of(t);
    CHECK(a.irreducibles == b.irreducibles);
    CHECK(a.universal_labels == b.universal_labels);
    for (std::size_t i = 1; i < a.size(); ++i) {
      const bool ordered = a.degree(i - 1) < a.degree(i) ||
                           (a.degree(i - 1) == a.degree(i) && a.b_invariants[i - 1] <= a.b_invariants[i]);
      CHECK(ordered);
    }
  }
}

TEST_CASE("fake degrees") {
  for (int n = 1; n <= 6; ++n) {
    const auto t = char_table_symmetric(n);
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::vector<int> lambda;
      std::string l = t.labels[i].substr(1, t.labels[i].size() - 2);
      for (std::size_t p = 0; p < l.size();) {
        const std::size_t c = l.find(',', p);
        lambda.push_back(std::stoi(l.substr(p, c - p)));
        p = c == std::string::npos ? l.size() : c + 1;
      }
      CAPTURE(t.labels[i]);
      CHECK(t.fake_degrees[i] == oracle::hook_fake_degree(lambda));
    }
  }
  CHECK(char_table_symmetric(2).fake_degrees[char_table_symmetric(2).sign()] == Poly::q(3));
  for (const char* t : {"A3", "B3", "D4", "G2", "F4", "H3", "I2(7)", "B2xA1", "H4", "E6"}) {
    const std::string name = t;
    CAPTURE(name);
    const auto tab = table_of(t);
    const auto& W = *tab.group;
    CHECK(tab.fake_degrees[tab.trivial()] == Poly(1L));
    CHECK(tab.fake_degrees[tab.sign()] == Poly::q(W.num_positive_roots()));
    Poly sum;
    for (std::size_t i = 0; i < tab.size(); ++i) {
      sum += tab.fake_degrees[i] * Rational(tab.degree(i));
      CHECK(tab.b_invariants[i] == tab.fake_degrees[i].valuation());
      for (const auto& [e, c] : tab.fake_degrees[i].terms()) CHECK(c > 0);
    }
    CHECK(sum == W.poincare_polynomial());
  }
  const auto g2 = table_of("G2");
  std::vector<int> bs;
  for (std::size_t i = 0; i < g2.size(); ++i)
    if (g2.degree(i) == 2) bs.push_back(g2.b_invariants[i]);
  std::sort(bs.begin(), bs.end());
  CHECK(bs == std::vector<int>{1, 2});
}

TEST_CASE("class fusion") {
  for (const auto& [t, J] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"A2", {0}}, {"B2", {0}}, {"B2", {1}}, {"B3", {0, 2}}, {"G2", {1}}, {"D4", {0, 2, 3}}, {"F4", {1, 2}},
           {"H3", {0, 1}}, {"A3", {}}, {"A3", {0, 1, 2}}}) {
    CAPTURE(t);
    const auto W = shared_group(t);
    const auto sub = parabolic_subgroup(*W, J);
    CHECK(class_fusion(sub, *W) == oracle::brute_fusion(sub, *W));
  }
  const auto a2 = shared_group("A2");
  const auto f = class_fusion(parabolic_subgroup(*a2, {0}), *a2);
  CHECK(f.size() == 2);
  CHECK(f[0] != f[1]);
  CHECK(class_fusion(parabolic_subgroup(*a2, {}), *a2) == std::vector<int>{a2->class_of(a2->identity())});
}

TEST_CASE("restriction and induction examples") {
  const auto a2 = char_table_symmetric(2);
  const auto sub = parabolic_subgroup(*a2.group, {0});
  const auto a1 = character_table(std::make_shared<const CoxeterGroup>(sub.group));
  const auto fus = class_fusion(sub, *a2.group);
  const std::size_t std2 = *a2.find("[2,1]");
  const auto res = restrict(a2.irreducibles[std2], fus);
  CHECK(res == constituent_sum(a1, {a1.trivial(), a1.sign()}));
  CHECK(inner_product(sub.group, res, a1.irreducibles[a1.trivial()]) == 1);
  CHECK(induce(a1.irreducibles[a1.trivial()], sub.group, *a2.group, fus) ==
        constituent_sum(a2, {a2.trivial(), std2}));

  const auto g2 = table_of("G2");
  const auto g2sub = parabolic_subgroup(*g2.group, {1});
  const auto g2a1 = character_table(std::make_shared<const CoxeterGroup>(g2sub.group));
  CHECK(restrict(g2.irreducibles[*g2.find("phi_{2,1}")], class_fusion(g2sub, *g2.group)) ==
        constituent_sum(g2a1, {g2a1.trivial(), g2a1.sign()}));

  // Trivial cases: the whole group and the trivial subgroup.
  const auto b3 = table_of("B3");
  const auto full = parabolic_subgroup(*b3.group, {0, 1, 2});
  const auto ffus = class_fusion(full, *b3.group);
  for (const auto& chi : b3.irreducibles) {
    CHECK(restrict(chi, ffus) == chi);
    CHECK(induce(chi, full.group, *b3.group, ffus) == chi);
  }
  const auto a1g = shared_group("A1");
  const auto triv = parabolic_subgroup(*a1g, {});
  const auto reg = induce({Cyclotomic(1)}, triv.group, *a1g, class_fusion(triv, *a1g));
  CHECK(reg == ClassFunction{Cyclotomic(2), Cyclotomic(0)});
}

TEST_CASE("induction matches the element-sum formula") {
  for (const auto& [t, J] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"B3", {0, 2}}, {"G2", {0}}, {"H3", {1, 2}}, {"D4", {1}}, {"A3", {0, 2}}}) {
    CAPTURE(t);
    const auto W = shared_group(t);
    const auto sub = parabolic_subgroup(*W, J);
    const auto st = character_table(std::make_shared<const CoxeterGroup>(sub.group));
    const auto fus = class_fusion(sub, *W);
    for (const auto& phi : st.irreducibles) CHECK(induce(phi, sub.group, *W, fus) == oracle::brute_induce(phi, sub, *W));
  }
}

TEST_CASE("inner products") {
  for (const char* t : {"A3", "H3", "I2(5)"}) {
    const auto tab = table_of(t);
    const auto& W = *tab.group;
    for (std::size_t i = 0; i < tab.size(); ++i)
      for (std::size_t j = 0; j < tab.size(); ++j)
        CHECK(inner_product(W, tab.irreducibles[i], tab.irreducibles[j]) == (i == j ? 1 : 0));
    CHECK(inner_product(W, tab.irreducibles[tab.trivial()], tab.irreducibles[tab.sign()]) == 0);
  }
}

TEST_CASE("Frobenius reciprocity and restriction transitivity") {
  for (const char* t : {"A3", "B3", "G2", "I2(5)"}) {
    const std::string name = t;
    CAPTURE(name);
    const auto tab = table_of(t);
    const auto& W = *tab.group;
    std::map<std::vector<int>, std::pair<ParabolicSubgroup, CharacterTable>> subs;
    for (const auto& J : all_subsets(W.rank())) {
      auto sub = parabolic_subgroup(W, J);
      auto st = character_table(std::make_shared<const CoxeterGroup>(sub.group));
      subs.emplace(J, std::make_pair(std::move(sub), std::move(st)));
    }
    for (const auto& [J, entry] : subs) {
      const auto& [sub, st] = entry;
      const auto fus = class_fusion(sub, W);
      for (const auto& phi : st.irreducibles) {
        const auto ind = induce(phi, sub.group, W, fus);
        for (const auto& m : decompose(tab, ind)) CHECK((m >= 0 && m.get_den() == 1));
        for (const auto& chi : tab.irreducibles)
          CHECK(inner_product(W, ind, chi) == inner_product(sub.group, phi, restrict(chi, fus)));
      }
      // K inside J: restrict through W_J.
      for (const auto& [K, kentry] : subs) {
        if (!std::includes(J.begin(), J.end(), K.begin(), K.end())) continue;
        std::vector<int> local;
        for (int k : K) local.push_back(static_cast<int>(std::find(J.begin(), J.end(), k) - J.begin()));
        const auto inner = parabolic_subgroup(sub.group, local);
        const auto f_kj = class_fusion(inner, sub.group);
        const auto f_kw = class_fusion(kentry.first, W);
        REQUIRE(inner.group.conjugacy_classes().size() == kentry.first.group.conjugacy_classes().size());
        for (const auto& chi : tab.irreducibles)
          CHECK(restrict(restrict(chi, fus), f_kj) == restrict(chi, f_kw));
      }
    }
  }
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(char_table_symmetric(0), InvalidType);
  CHECK_THROWS_AS(char_table_symmetric(12), InvalidType);
  CHECK_THROWS_AS(char_table_hyperoctahedral(1), InvalidType);
  CHECK_THROWS_AS(char_table_demihyperoctahedral(2), InvalidType);
  CHECK_THROWS_AS(char_table_dihedral(2), InvalidType);
}
