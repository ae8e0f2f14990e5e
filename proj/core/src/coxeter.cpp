#include "weylhc/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "weylhc/error.hpp"

namespace weylhc {

namespace {

std::string root_key(const std::vector<Cyclotomic>& root, int conductor) {
  std::string key;
  for (const Cyclotomic& x : root) {
    for (const Rational& c : x.coordinates_in(conductor)) {
      key += c.get_str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace

CoxeterGroup CoxeterGroup::enumerate(const RootDatum& datum, std::uint64_t bound) {
  if (bound > kHardCap)
    throw BoundExceeded("enumeration bound " + std::to_string(bound) + " exceeds the hard cap " +
                        std::to_string(kHardCap));
  for (const auto& c : datum.type().components())
    if (c.family == Family::E && c.rank >= 7)
      throw BoundExceeded("W(" + c.to_string() + ") has order " + CartanType({c}).expected_order().get_str() +
                          "; E7 and E8 are not enumerated");
  const Integer expected = datum.type().expected_order();
  if (expected > Integer(static_cast<unsigned long>(bound)))
    throw BoundExceeded("|W(" + datum.type().to_string() + ")| = " + expected.get_str() + " exceeds the bound " +
                        std::to_string(bound));

  CoxeterGroup g;
  g.datum_ = datum;
  const int n = datum.rank();
  const int np = static_cast<int>(datum.num_positive_roots());
  g.n_pos_ = np;
  g.n_roots_ = 2 * np;
  if (g.n_roots_ > 65535) throw BoundExceeded("too many roots");

  // Simple reflections as root permutations.
  std::unordered_map<std::string, int> root_index;
  for (int k = 0; k < np; ++k) root_index.emplace(root_key(datum.positive_roots()[k], datum.conductor()), k);
  std::vector<std::vector<RootIndex>> simple(n, std::vector<RootIndex>(g.n_roots_));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < np; ++k) {
      RootIndex img;
      if (k == i) {
        img = static_cast<RootIndex>(np + i);
      } else {
        auto it = root_index.find(root_key(datum.reflect(i, datum.positive_roots()[k]), datum.conductor()));
        if (it == root_index.end()) throw InternalError("reflected root missing from the root list");
        img = static_cast<RootIndex>(it->second);
      }
      simple[i][k] = img;
      simple[i][k + np] = g.negate(img);
    }
  }

  auto add = [&](std::u16string key, const RootIndex* perm, std::uint16_t len, Elem parent, int last) {
    if (g.length_.size() >= bound) throw BoundExceeded("enumeration exceeded the bound " + std::to_string(bound));
    const Elem id = static_cast<Elem>(g.length_.size());
    g.index_.emplace(std::move(key), id);
    g.perm_.insert(g.perm_.end(), perm, perm + g.n_roots_);
    g.length_.push_back(len);
    g.parent_.push_back(parent);
    g.last_.push_back(static_cast<std::int8_t>(last));
  };

  std::vector<RootIndex> id_perm(g.n_roots_);
  for (int r = 0; r < g.n_roots_; ++r) id_perm[r] = static_cast<RootIndex>(r);
  {
    std::u16string key(n, u'\0');
    for (int j = 0; j < n; ++j) key[j] = static_cast<char16_t>(j);
    add(std::move(key), id_perm.data(), 0, 0, -1);
  }
  // Breadth-first search by right multiplication w -> w s_i yields shortlex order.
  std::vector<RootIndex> buf(g.n_roots_);
  std::u16string key(n, u'\0');
  for (Elem w = 0; w < g.length_.size(); ++w) {
    for (int i = 0; i < n; ++i) {
      const RootIndex* pw = g.perm_.data() + static_cast<std::size_t>(w) * g.n_roots_;
      for (int j = 0; j < n; ++j) key[j] = static_cast<char16_t>(pw[simple[i][j]]);
      if (g.index_.count(key)) continue;
      for (int r = 0; r < g.n_roots_; ++r) buf[r] = pw[simple[i][r]];
      add(key, buf.data(), static_cast<std::uint16_t>(g.length_[w] + 1), w, i);
    }
  }
  if (Integer(static_cast<unsigned long>(g.size())) != expected)
    throw InternalError("enumerated " + std::to_string(g.size()) + " elements, expected " + expected.get_str());

  g.reflections_.assign(np, 0);
  int missing = np;
  for (Elem w = 0; w < g.size() && missing > 0; ++w) {
    for (int i = 0; i < n; ++i) {
      const RootIndex r = g.act(w, static_cast<RootIndex>(i));
      if (!g.is_positive(r) || (g.reflections_[r] != 0)) continue;
      g.reflections_[r] = g.multiply(g.multiply(w, g.generator(i)), g.inverse(w));
      --missing;
    }
  }
  g.compute_classes();
  g.compute_degrees();
  return g;
}

Elem CoxeterGroup::lookup(const std::u16string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw InternalError("root permutation is not a group element");
  return it->second;
}

Elem CoxeterGroup::find(std::span<const RootIndex> simple_images) const {
  std::u16string key(simple_images.begin(), simple_images.end());
  return lookup(key);
}

Elem CoxeterGroup::multiply(Elem a, Elem b) const {
  const int n = rank();
  std::u16string key(n, u'\0');
  for (int j = 0; j < n; ++j) key[j] = static_cast<char16_t>(act(a, act(b, static_cast<RootIndex>(j))));
  return lookup(key);
}

Elem CoxeterGroup::inverse(Elem a) const {
  const int n = rank();
  std::u16string key(n, u'\0');
  const auto p = permutation(a);
  int found = 0;
  for (int r = 0; r < n_roots_ && found < n; ++r) {
    if (p[r] < n) {
      key[p[r]] = static_cast<char16_t>(r);
      ++found;
    }
  }
  return lookup(key);
}

Elem CoxeterGroup::power(Elem a, long k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Elem result = identity();
  while (k > 0) {
    if (k & 1) result = multiply(result, a);
    a = multiply(a, a);
    k >>= 1;
  }
  return result;
}

int CoxeterGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

int CoxeterGroup::inversion_count(Elem w) const {
  int c = 0;
  for (int r = 0; r < n_pos_; ++r)
    if (!is_positive(act(w, static_cast<RootIndex>(r)))) ++c;
  return c;
}

std::vector<int> CoxeterGroup::word(Elem w) const {
  std::vector<int> out;
  while (w != identity()) {
    out.push_back(last_[w]);
    w = parent_[w];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Elem CoxeterGroup::from_word(const std::vector<int>& word) const {
  Elem w = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw DomainError("generator index out of range in word");
    w = multiply(w, generator(i));
  }
  return w;
}

std::string CoxeterGroup::word_string(Elem w) const {
  const auto wd = word(w);
  if (wd.empty()) return "()";
  std::string s;
  for (std::size_t k = 0; k < wd.size(); ++k) {
    if (rank() > 9 && k) s += '.';
    s += std::to_string(wd[k] + 1);
  }
  return s;
}

Elem CoxeterGroup::reflection(RootIndex root) const {
  if (!is_positive(root)) root = negate(root);
  return reflections_.at(root);
}

void CoxeterGroup::compute_classes() {
  const int n = rank();
  class_of_.assign(size(), -1);
  std::u16string key(n, u'\0');
  std::vector<Elem> stack;
  for (Elem x = 0; x < size(); ++x) {
    if (class_of_[x] >= 0) continue;
    const int c = static_cast<int>(classes_.size());
    std::uint64_t count = 0;
    class_of_[x] = c;
    stack.assign(1, x);
    while (!stack.empty()) {
      const Elem y = stack.back();
      stack.pop_back();
      ++count;
      for (int i = 0; i < n; ++i) {
        const Elem s = generator(i);
        for (int j = 0; j < n; ++j) key[j] = static_cast<char16_t>(act(s, act(y, act(s, static_cast<RootIndex>(j)))));
        const Elem z = lookup(key);
        if (class_of_[z] < 0) {
          class_of_[z] = c;
          stack.push_back(z);
        }
      }
    }
    classes_.push_back({x, count});
  }
}

Matrix<Cyclotomic> CoxeterGroup::reflection_matrix(Elem w) const {
  Matrix<Cyclotomic> m = Matrix<Cyclotomic>::identity(rank());
  for (int i : word(w)) m = m * datum_.reflection_matrix(i);
  return m;
}

void CoxeterGroup::compute_degrees() {
  degrees_.clear();
  for (const auto& comp : datum_.components()) {
    const RootDatum sub = datum_.restrict_to(comp.generators);
    const int k = sub.rank();
    Matrix<Cyclotomic> c = Matrix<Cyclotomic>::identity(k);
    for (int i = 0; i < k; ++i) c = c * sub.reflection_matrix(i);
    // Traces of c^0, c^1, ... until c^h = 1.
    std::vector<Cyclotomic> traces;
    Matrix<Cyclotomic> p = Matrix<Cyclotomic>::identity(k);
    const Matrix<Cyclotomic> id = p;
    do {
      traces.push_back(p.trace());
      p = p * c;
      if (traces.size() > 64) throw InternalError("Coxeter element of unexpectedly large order");
    } while (!(p == id));
    const int h = static_cast<int>(traces.size());
    // Multiplicity of the eigenvalue zeta_h^e is (1/h) sum_j tr(c^j) zeta_h^(-ej).
    Integer product = 1;
    for (int e = 0; e < h; ++e) {
      Cyclotomic mult(0);
      for (int j = 0; j < h; ++j) mult += traces[j] * Cyclotomic::zeta(h, -static_cast<long>(e) * j);
      mult = mult * Cyclotomic(fraction(1, h));
      if (!mult.is_rational() || mult.rational().get_den() != 1 || mult.rational() < 0)
        throw InternalError("non-integral eigenvalue multiplicity for a Coxeter element");
      const long m = mult.rational().get_num().get_si();
      for (long t = 0; t < m; ++t) {
        degrees_.push_back(e + 1);
        product *= e + 1;
      }
    }
    if (product != CartanType({comp.type}).expected_order())
      throw InternalError("product of degrees differs from the order of W(" + comp.type.to_string() + ")");
  }
  std::sort(degrees_.begin(), degrees_.end());
}

Poly CoxeterGroup::poincare_polynomial() const {
  std::vector<long> counts(n_pos_ + 1, 0);
  for (auto l : length_) ++counts[l];
  Poly p;
  for (int l = 0; l <= n_pos_; ++l) p.set(l, Rational(counts[l]));
  return p;
}

namespace {

std::vector<int> normalize_J(const CoxeterGroup& W, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  if (std::adjacent_find(J.begin(), J.end()) != J.end()) throw DomainError("parabolic subset has repeated indices");
  for (int j : J)
    if (j < 0 || j >= W.rank()) throw DomainError("parabolic index " + std::to_string(j + 1) + " out of range");
  return J;
}

// Minimal-length representative of w W_J: strip right descents in J.
Elem min_coset_rep(const CoxeterGroup& W, Elem w, const std::vector<int>& J) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : J) {
      if (!W.is_positive(W.act(w, static_cast<RootIndex>(j)))) {
        w = W.multiply(w, W.generator(j));
        changed = true;
      }
    }
  }
  return w;
}

}  // namespace

ParabolicSubgroup parabolic_subgroup(const CoxeterGroup& W, std::vector<int> J) {
  J = normalize_J(W, std::move(J));
  ParabolicSubgroup P{J, CoxeterGroup::enumerate(W.datum().restrict_to(J), CoxeterGroup::kHardCap), {}};
  P.embedding.resize(P.group.size());
  P.embedding[0] = W.identity();
  for (Elem x = 1; x < P.group.size(); ++x) {
    const auto wd = P.group.word(x);
    const Elem parent = P.group.from_word(std::vector<int>(wd.begin(), wd.end() - 1));
    P.embedding[x] = W.multiply(P.embedding[parent], W.generator(J[wd.back()]));
  }
  return P;
}

std::vector<RootIndex> parabolic_roots(const CoxeterGroup& W, const std::vector<int>& J) {
  std::vector<bool> in_j(W.rank(), false);
  for (int j : J) in_j[j] = true;
  std::vector<RootIndex> out;
  const auto& roots = W.datum().positive_roots();
  for (int k = 0; k < W.num_positive_roots(); ++k) {
    bool inside = true;
    for (int i = 0; i < W.rank() && inside; ++i)
      if (!in_j[i] && !roots[k][i].is_zero()) inside = false;
    if (inside) out.push_back(static_cast<RootIndex>(k));
  }
  const std::size_t half = out.size();
  for (std::size_t k = 0; k < half; ++k) out.push_back(W.negate(out[k]));
  return out;
}

RelativeWeylGroup relative_weyl_group(const CoxeterGroup& W, const std::vector<int>& J_in) {
  const std::vector<int> J = normalize_J(W, J_in);
  RelativeWeylGroup R;
  R.J = J;
  std::vector<bool> in_phi(2 * W.num_positive_roots(), false);
  for (RootIndex r : parabolic_roots(W, J)) in_phi[r] = true;
  // w normalizes W_J iff w permutes Phi_J, iff w(alpha_j) lies in Phi_J for j in J.
  for (Elem w = 0; w < W.size(); ++w) {
    bool normalizes = true;
    bool minimal = true;
    for (int j : J) {
      const RootIndex r = W.act(w, static_cast<RootIndex>(j));
      if (!in_phi[r]) {
        normalizes = false;
        break;
      }
      if (!W.is_positive(r)) minimal = false;
    }
    if (!normalizes) continue;
    ++R.normalizer_order;
    if (minimal) R.coset_reps.push_back(w);
  }
  R.parabolic_order = R.normalizer_order / R.coset_reps.size();
  std::unordered_map<Elem, int> where;
  for (std::size_t i = 0; i < R.coset_reps.size(); ++i) where.emplace(R.coset_reps[i], static_cast<int>(i));
  const std::size_t m = R.coset_reps.size();
  R.table.assign(m, std::vector<int>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Elem p = min_coset_rep(W, W.multiply(R.coset_reps[a], R.coset_reps[b]), J);
      auto it = where.find(p);
      if (it == where.end()) throw InternalError("normalizer is not closed under multiplication");
      R.table[a][b] = it->second;
    }
  return R;
}

SplittingResult normalizer_splitting_check(const CoxeterGroup& W, const std::vector<int>& J_in) {
  const std::vector<int> J = normalize_J(W, J_in);
  const RelativeWeylGroup R = relative_weyl_group(W, J);
  const std::size_t m = R.order();
  std::set<Elem> reps(R.coset_reps.begin(), R.coset_reps.end());

  auto closed = [&](const std::vector<Elem>& s) {
    std::set<Elem> set(s.begin(), s.end());
    for (Elem a : s)
      for (Elem b : s)
        if (!set.count(W.multiply(a, b))) return false;
    return true;
  };
  if (closed(R.coset_reps)) return {true, R.coset_reps};

  // Fallback: choose a lift in each coset, generating from the quotient's
  // elements in order and propagating products; backtrack on conflicts.
  const ParabolicSubgroup P = parabolic_subgroup(W, J);
  std::vector<Elem> lift(m, 0);
  std::vector<bool> fixed(m, false);
  std::function<bool(std::size_t)> search = [&](std::size_t q) -> bool {
    while (q < m && fixed[q]) ++q;
    if (q == m) {
      std::vector<Elem> s(lift.begin(), lift.end());
      return closed(s);
    }
    for (Elem x : P.embedding) {
      const std::vector<Elem> saved = lift;
      const std::vector<bool> saved_fixed = fixed;
      lift[q] = W.multiply(R.coset_reps[q], x);
      fixed[q] = true;
      // Close the fixed set under products; fail if a coset gets two lifts.
      bool ok = true, grew = true;
      while (ok && grew) {
        grew = false;
        for (std::size_t a = 0; a < m && ok; ++a)
          for (std::size_t b = 0; b < m && ok; ++b) {
            if (!fixed[a] || !fixed[b]) continue;
            const int c = R.table[a][b];
            const Elem prod = W.multiply(lift[a], lift[b]);
            if (fixed[c]) {
              ok = lift[c] == prod;
            } else {
              lift[c] = prod;
              fixed[c] = true;
              grew = true;
            }
          }
      }
      if (ok && search(q + 1)) return true;
      lift = saved;
      fixed = saved_fixed;
    }
    return false;
  };
  if (search(0)) return {true, lift};
  return {false, {}};
}

}  // namespace weylhc
