#include <stdexcept>
#include <unordered_map>

#include "oracles.hpp"

namespace oracle {

using namespace weylhc;

namespace {

Poly q_integer(int n) {
  Poly p;
  for (int i = 0; i < n; ++i) p += Poly::q(i);
  return p;
}

}  // namespace

Poly hook_fake_degree(const std::vector<int>& lambda) {
  int n = 0, n_lambda = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    n += lambda[i];
    n_lambda += static_cast<int>(i) * lambda[i];
  }
  Poly num = Poly::q(n_lambda);
  for (int i = 1; i <= n; ++i) num = num * q_integer(i);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int leg = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++leg;
      const int hook = lambda[i] - j - 1 + leg + 1;
      auto q = num.exact_div(q_integer(hook));
      if (!q) throw std::logic_error("hook formula did not divide");
      num = *q;
    }
  }
  return num;
}

std::vector<int> brute_fusion(const ParabolicSubgroup& sub, const CoxeterGroup& sup) {
  std::vector<int> out;
  const auto& sup_classes = sup.conjugacy_classes();
  for (const auto& cls : sub.group.conjugacy_classes()) {
    std::vector<int> word;
    for (int g : sub.group.word(cls.representative)) word.push_back(sub.J[g]);
    const Elem e = sup.from_word(word);
    int found = -1;
    for (Elem x = 0; x < sup.size() && found < 0; ++x) {
      const Elem c = sup.multiply(sup.multiply(x, e), sup.inverse(x));
      for (std::size_t k = 0; k < sup_classes.size(); ++k)
        if (sup_classes[k].representative == c) found = static_cast<int>(k);
    }
    if (found < 0) throw std::logic_error("no conjugate class representative");
    out.push_back(found);
  }
  return out;
}

ClassFunction brute_induce(const ClassFunction& phi, const ParabolicSubgroup& sub, const CoxeterGroup& sup) {
  std::unordered_map<Elem, Elem> back;
  for (Elem h = 0; h < sub.embedding.size(); ++h) back.emplace(sub.embedding[h], h);
  const auto& sup_classes = sup.conjugacy_classes();
  ClassFunction out;
  for (const auto& cls : sup_classes) {
    Cyclotomic sum(0);
    for (Elem x = 0; x < sup.size(); ++x) {
      const Elem c = sup.multiply(sup.multiply(x, cls.representative), sup.inverse(x));
      auto it = back.find(c);
      if (it != back.end()) sum += phi[sub.group.class_of(it->second)];
    }
    out.push_back(sum / Cyclotomic(static_cast<long>(sub.group.size())));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> brute_parabolic_pairs(const CharacterTable& table) {
  const CoxeterGroup& W = *table.group;
  const int n = W.rank();
  std::vector<bool> covered(W.size(), false);
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) J.push_back(i);
    // Elements of W_J: closure of the identity under right multiplication by s_j.
    std::vector<Elem> members{W.identity()};
    std::vector<bool> seen(W.size(), false);
    seen[W.identity()] = true;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int j : J) {
        const Elem e = W.from_word({j});
        const Elem x = W.multiply(members[k], e);
        if (!seen[x]) {
          seen[x] = true;
          members.push_back(x);
        }
      }
    for (Elem w = 0; w < W.size(); ++w)
      for (Elem x : members) covered[W.multiply(W.multiply(w, x), W.inverse(w))] = true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j) {
      bool equal = true;
      for (Elem g = 0; g < W.size() && equal; ++g)
        if (covered[g] && table.irreducibles[i][W.class_of(g)] != table.irreducibles[j][W.class_of(g)]) equal = false;
      if (equal) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace oracle
