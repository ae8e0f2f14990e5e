#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "oracles.hpp"
#include "weylhc/error.hpp"
#include "weylhc/hcseries.hpp"

using namespace weylhc;

namespace {

std::shared_ptr<const CoxeterGroup> shared_group(const std::string& t) {
  return std::make_shared<const CoxeterGroup>(CoxeterGroup::enumerate(RootDatum::from_type(CartanType::parse(t))));
}

CharacterTable table_of(const std::string& t) { return character_table(shared_group(t)); }

CyclotomicPoly lift(const Poly& p) {
  return p.map_coeffs([](const Rational& c) { return Cyclotomic(c); });
}

std::set<std::pair<std::string, std::string>> label_pairs(const CharacterTable& tab,
                                                          const std::vector<std::pair<std::size_t, std::size_t>>& ps) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [i, j] : ps) out.insert(std::minmax(tab.universal_labels[i], tab.universal_labels[j]));
  return out;
}

}  // namespace

TEST_CASE("pairs for A1, A2 and G2") {
  const auto a1 = table_of("A1");
  const auto p1 = pairs_equal_on_proper_parabolics(a1);
  REQUIRE(p1.size() == 1);
  CHECK(std::set<std::size_t>{p1[0].first, p1[0].second} == std::set<std::size_t>{a1.trivial(), a1.sign()});
  CHECK(pairs_equal_on_proper_parabolics(table_of("A2")).empty());
  const auto g2 = table_of("G2");
  const auto p2 = pairs_equal_on_proper_parabolics(g2);
  CHECK(label_pairs(g2, p2) == std::set<std::pair<std::string, std::string>>{{"phi_{2,1}", "phi_{2,2}"}});
}

TEST_CASE("pairs agree with conjugate parabolics built by brute force") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "G2", "H3", "I2(5)", "I2(8)", "A1xA1", "A2xA1"}) {
    const std::string name = t;
    CAPTURE(name);
    const auto tab = table_of(t);
    const auto pairs = pairs_equal_on_proper_parabolics(tab);
    CHECK(pairs == oracle::brute_parabolic_pairs(tab));
    for (const auto& [i, j] : pairs) {
      CHECK(i < j);
      CHECK(tab.degree(i) == tab.degree(j));
    }
  }
}

TEST_CASE("pairs satisfy restriction equality on every proper parabolic") {
  for (const char* t : {"B3", "H3", "I2(7)", "G2"}) {
    const auto tab = table_of(t);
    const auto& W = *tab.group;
    for (const auto& [i, j] : pairs_equal_on_proper_parabolics(tab))
      for (unsigned mask = 0; mask + 1 < (1u << W.rank()); ++mask) {
        std::vector<int> J;
        for (int g = 0; g < W.rank(); ++g)
          if (mask & (1u << g)) J.push_back(g);
        const auto fusion = class_fusion(parabolic_subgroup(W, J), W);
        CHECK(restrict(tab.irreducibles[i], fusion) == restrict(tab.irreducibles[j], fusion));
      }
  }
}

TEST_CASE("pairs do not depend on the row order") {
  std::mt19937 rng(7);
  for (const char* t : {"G2", "H3", "I2(9)", "B3"}) {
    const auto tab = table_of(t);
    CharacterTable shuffled = tab;
    std::vector<std::size_t> perm(tab.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      shuffled.irreducibles[i] = tab.irreducibles[perm[i]];
      shuffled.labels[i] = tab.labels[perm[i]];
      shuffled.universal_labels[i] = tab.universal_labels[perm[i]];
    }
    CHECK(label_pairs(shuffled, pairs_equal_on_proper_parabolics(shuffled)) ==
          label_pairs(tab, pairs_equal_on_proper_parabolics(tab)));
  }
}

TEST_CASE("separating the A1 pair") {
  const auto a1 = table_of("A1");
  const auto pair = pairs_equal_on_proper_parabolics(a1).front();
  for (int k = 1; k <= 10; ++k) {
    CAPTURE(k);
    const auto s = separate_pair(a1, pair, HeckeParams{{k}});
    REQUIRE(s.verdict == Verdict::SeparatedBySchur);
    const auto [c1, ce] = schur_A1(k);
    const bool triv_first = s.first == a1.trivial();
    CHECK(*s.first_witness == (triv_first ? c1.value : ce.value));
    CHECK(*s.second_witness == (triv_first ? ce.value : c1.value));
  }
  const auto none = separate_pair(a1, pair, std::nullopt);
  CHECK(none.verdict == Verdict::Unresolved);
  CHECK(!none.first_witness);
}

TEST_CASE("separating the G2 pair") {
  const auto g2 = table_of("G2");
  const auto pair = pairs_equal_on_proper_parabolics(g2).front();
  for (int k : {1, 2, 5}) {
    CAPTURE(k);
    const auto s = separate_pair(g2, pair, HeckeParams::g2(k));
    REQUIRE(s.verdict == Verdict::SeparatedBySchur);
    REQUIRE(s.first_witness);
    REQUIRE(s.second_witness);
    CHECK(*s.first_witness != *s.second_witness);
    const int b1 = g2.universal_labels[s.first] == "phi_{2,1}" ? 1 : 2;
    CHECK(*s.first_witness == schur_G2(k, b1).value);
    CHECK(*s.second_witness == schur_G2(k, 3 - b1).value);
    // Distinct at q = 2 as well.
    CHECK(s.first_witness->evaluate(Cyclotomic(2)) != s.second_witness->evaluate(Cyclotomic(2)));
  }
  // k = 1 at q = 2: 2 q^-1 Phi_3(q^0) Phi_6(q) = 9 and 2 q^-1 Phi_3(q) Phi_6(q^0) = 7.
  const auto s = separate_pair(g2, pair, HeckeParams::g2(1));
  std::vector<Rational> values{s.first_witness->evaluate(Cyclotomic(2)).rational(),
                              s.second_witness->evaluate(Cyclotomic(2)).rational()};
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<Rational>{7, 9});
  CHECK(separate_pair(g2, pair, std::nullopt).verdict == Verdict::Unresolved);
}

TEST_CASE("degree separation and invalid pairs") {
  const auto b2 = table_of("B2");
  CHECK(separate_pair(b2, {b2.trivial(), b2.size() - 1}, std::nullopt).verdict == Verdict::SeparatedByDegree);
  CHECK_THROWS_AS(separate_pair(b2, {0, 0}, std::nullopt), DomainError);
  CHECK_THROWS_AS(separate_pair(b2, {0, 99}, std::nullopt), DomainError);
}

TEST_CASE("dihedral pairs of two-dimensional characters") {
  for (int m = 5; m <= 12; ++m) {
    CAPTURE(m);
    const auto tab = char_table_dihedral(m);
    const auto pairs = pairs_equal_on_proper_parabolics(tab);
    const std::size_t two_dim = (m - 1) / 2;
    CHECK(pairs.size() == two_dim * (two_dim - 1) / 2);
    for (const auto& p : pairs) {
      CHECK(tab.degree(p.first) == 2);
      const auto s = separate_pair(tab, p, HeckeParams::equal(2));
      CHECK(s.verdict == Verdict::SeparatedBySchur);
    }
  }
}

TEST_CASE("check_type reports") {
  CheckOptions opts;
  opts.k = 1;
  for (const char* t : {"A2", "A3", "B2", "B3", "D4", "F4"}) {
    const auto r = check_type(t, opts);
    CHECK(r.computed);
    CHECK(r.pairs.empty());
    CHECK(r.matches_expectation);
    CHECK(r.error.empty());
  }
  const auto g2 = check_type("g2", opts);
  CHECK(g2.type == "G2");
  REQUIRE(g2.pairs.size() == 1);
  CHECK(g2.pairs[0].verdict == Verdict::SeparatedBySchur);
  CHECK(g2.matches_expectation);
  const auto g2_plain = check_type("G2", {});
  REQUIRE(g2_plain.pairs.size() == 1);
  CHECK(g2_plain.pairs[0].verdict == Verdict::Unresolved);
  CHECK(g2_plain.matches_expectation);
  CHECK(!g2_plain.all_resolved());

  const auto e8 = check_type("E8", {});
  CHECK(!e8.computed);
  REQUIRE(e8.exceptional);
  CHECK(e8.exceptional->dimension == 4096);
  CHECK(e8.matches_expectation);
  CHECK(check_type("E7", {}).exceptional->dimension == 512);

  const auto bad = check_type("Q9", {});
  CHECK(!bad.error.empty());
  CHECK(!bad.error_is_bound);
  CheckOptions tight;
  tight.bound = 100;
  const auto big = check_type("B4", tight);
  CHECK(big.error_is_bound);
  CHECK(!big.computed);
  const auto e6 = check_type("E6", {});
  CHECK(!e6.computed);
  CHECK(!e6.error.empty());

  // Non-crystallographic pairs are real and do not match the empty prediction.
  const auto i5 = check_type("I2(5)", opts);
  CHECK(i5.pairs.size() == 1);
  CHECK(i5.all_resolved());
  CHECK(!i5.matches_expectation);
}

TEST_CASE("exceptional family records") {
  const auto& recs = exceptional_families();
  REQUIRE(recs.size() == 2);
  for (const auto& r : recs) {
    CHECK((r.type == "E7" || r.type == "E8"));
    CHECK((r.dimension == 512 || r.dimension == 4096));
    CHECK(!r.citation.empty());
  }
  CHECK(!exceptional_family("E6"));
}

TEST_CASE("restriction vectors") {
  CheckOptions opts;
  opts.restriction_vectors = true;
  const auto r = check_type("G2", opts);
  REQUIRE(r.restrictions.size() == 1);
  const auto& recs = r.restrictions[0];
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].J.empty());
  REQUIRE(recs[0].constituents.size() == 1);
  CHECK(recs[0].constituents[0].second == 2);
  for (const auto& rec : recs) {
    Integer total = 0;
    for (const auto& [label, mult] : rec.constituents) total += mult;
    CHECK(total == 2);
  }
}

TEST_CASE("batch runs keep request order and are deterministic") {
  const std::vector<std::string> types{"G2", "A1", "A3", "E8", "B2", "I2(5)"};
  CheckOptions one;
  one.k = 2;
  one.threads = 1;
  CheckOptions many = one;
  many.threads = 4;
  const auto a = run_proposition_check(types, one);
  const auto b = run_proposition_check(types, many);
  REQUIRE(a.size() == types.size());
  for (std::size_t i = 0; i < types.size(); ++i) {
    CHECK(a[i].type == CartanType::parse(types[i]).to_string());
    CHECK(a[i].type == b[i].type);
    REQUIRE(a[i].pairs.size() == b[i].pairs.size());
    for (std::size_t p = 0; p < a[i].pairs.size(); ++p) {
      CHECK(a[i].pairs[p].first_label == b[i].pairs[p].first_label);
      CHECK(a[i].pairs[p].verdict == b[i].pairs[p].verdict);
      CHECK(a[i].pairs[p].first_witness == b[i].pairs[p].first_witness);
    }
    CHECK(a[i].matches_expectation == b[i].matches_expectation);
  }
  const auto defaults = default_check_types(false);
  CHECK(std::find(defaults.begin(), defaults.end(), "E6") == defaults.end());
  const auto with_e6 = default_check_types(true);
  CHECK(std::find(with_e6.begin(), with_e6.end(), "E6") != with_e6.end());
}

TEST_CASE("reducible groups reduce to their components") {
  for (const char* t : {"A1xA1", "A2xA1", "B2xA1", "A1xA1xA1"}) {
    const auto tab = table_of(t);
    CHECK(pairs_equal_on_proper_parabolics(tab).empty());
    CHECK(reducible_factor_check(tab));
    const auto r = check_type(t, {});
    CHECK(r.pairs.empty());
    CHECK(r.matches_expectation);
  }
  CHECK(reducible_factor_check(table_of("G2")));
  CHECK(reducible_factor_check(table_of("A1")));
}

TEST_CASE("A1 pair witnesses for the check") {
  CheckOptions opts;
  for (int k = 1; k <= 10; ++k) {
    opts.k = k;
    const auto r = check_type("A1", opts);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].verdict == Verdict::SeparatedBySchur);
    CHECK(r.matches_expectation);
    const auto phi2 = lift(cyclotomic(2).substitute_power(k));
    CHECK((*r.pairs[0].first_witness == phi2 || *r.pairs[0].second_witness == phi2));
  }
}
