#include "weylhc/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "weylhc/error.hpp"

namespace weylhc {

namespace {

char family_letter(Family f) { return "ABCDEFGHI"[static_cast<int>(f)]; }

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer component_order(const CartanComponent& c) {
  const int n = c.rank;
  switch (c.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (Integer(1) << n) * factorial(n);
    case Family::D: return (Integer(1) << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
    case Family::H: return n == 3 ? 120 : 14400;
    case Family::I: return 2 * c.m;
  }
  return 0;
}

std::vector<std::vector<int>> coxeter_from_cartan(const Matrix<Cyclotomic>& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = coxeter_order_from_product(a(i, j) * a(j, i));
  return m;
}

std::vector<CartanComponent> candidates(int k, int dihedral_m) {
  std::vector<CartanComponent> out;
  out.push_back({Family::A, k, 0});
  if (k >= 2) {
    out.push_back({Family::B, k, 0});
    out.push_back({Family::C, k, 0});
  }
  if (k >= 4) out.push_back({Family::D, k, 0});
  if (k >= 6 && k <= 8) out.push_back({Family::E, k, 0});
  if (k == 4) out.push_back({Family::F, 4, 0});
  if (k == 2) out.push_back({Family::G, 2, 0});
  if (k == 3 || k == 4) out.push_back({Family::H, k, 0});
  if (k == 2 && dihedral_m >= 3) out.push_back({Family::I, 2, dihedral_m});
  return out;
}

// Identify one connected component of a Coxeter diagram.  Among all diagram
// isomorphisms onto a standard type, one that also matches the Cartan matrix
// exactly is preferred (this separates B_n from C_n).
ComponentEmbedding classify_component(const Matrix<Cyclotomic>& a,
                                      const std::vector<std::vector<int>>& cox,
                                      const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  const int dihedral_m = k == 2 ? cox[nodes[0]][nodes[1]] : 0;
  std::optional<ComponentEmbedding> fallback;
  for (const CartanComponent& cand : candidates(k, dihedral_m)) {
    const Matrix<Cyclotomic> std_a = standard_cartan_matrix(cand);
    const auto std_cox = coxeter_from_cartan(std_a);
    std::vector<int> perm(k, -1);
    std::vector<bool> used(k, false);
    std::optional<std::vector<int>> exact, any;
    std::function<void(int)> dfs = [&](int pos) {
      if (exact) return;
      if (pos == k) {
        if (!any) any = perm;
        bool same = true;
        for (int i = 0; i < k && same; ++i)
          for (int j = 0; j < k && same; ++j)
            if (a(nodes[perm[i]], nodes[perm[j]]) != std_a(i, j)) same = false;
        if (same) exact = perm;
        return;
      }
      for (int c = 0; c < k; ++c) {
        if (used[c]) continue;
        bool ok = true;
        for (int p = 0; p < pos && ok; ++p)
          if (cox[nodes[perm[p]]][nodes[c]] != std_cox[p][pos]) ok = false;
        if (!ok) continue;
        used[c] = true;
        perm[pos] = c;
        dfs(pos + 1);
        used[c] = false;
      }
    };
    dfs(0);
    auto embed = [&](const std::vector<int>& p) {
      ComponentEmbedding e{cand, {}};
      for (int i = 0; i < k; ++i) e.generators.push_back(nodes[p[i]]);
      return e;
    };
    if (exact) return embed(*exact);
    if (any && !fallback) fallback = embed(*any);
  }
  if (!fallback) throw InvalidType("Cartan matrix is not of finite type");
  return *fallback;
}

std::vector<ComponentEmbedding> classify(const Matrix<Cyclotomic>& a,
                                         const std::vector<std::vector<int>>& cox) {
  const int n = static_cast<int>(a.rows());
  std::vector<bool> seen(n, false);
  std::vector<ComponentEmbedding> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> nodes;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      nodes.push_back(v);
      for (int u = 0; u < n; ++u)
        if (!seen[u] && cox[v][u] > 2) {
          seen[u] = true;
          queue.push_back(u);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(classify_component(a, cox, nodes));
  }
  return out;
}

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

int first_sign(const std::vector<Cyclotomic>& root) {
  for (const Cyclotomic& x : root) {
    if (x.is_zero()) continue;
    return x.real_value() > 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

std::string CartanComponent::to_string() const {
  if (family == Family::I) return "I2(" + std::to_string(m) + ")";
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void validate(const CartanComponent& c) {
  const int n = c.rank;
  bool ok = false;
  switch (c.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
    case Family::H: ok = n == 3 || n == 4; break;
    case Family::I: ok = n == 2 && c.m >= 3; break;
  }
  if (!ok) throw InvalidType("rank out of bounds for type " + c.to_string());
}

CartanType::CartanType(std::vector<CartanComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_) validate(c);
}

CartanType CartanType::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s.empty()) throw InvalidType("empty Cartan type");
  std::vector<CartanComponent> comps;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(s.find('X', pos), s.size());
    const std::string part = s.substr(pos, end - pos);
    if (part.size() < 2) throw InvalidType("malformed Cartan type '" + std::string(text) + "'");
    const char letter = part[0];
    if (letter < 'A' || letter > 'I') throw InvalidType("unknown family in '" + std::string(text) + "'");
    CartanComponent c;
    c.family = static_cast<Family>(letter - 'A');
    std::size_t i = 1;
    auto read_int = [&](std::size_t& at) {
      const std::size_t start = at;
      while (at < part.size() && std::isdigit(static_cast<unsigned char>(part[at]))) ++at;
      if (at == start || at - start > 6) throw InvalidType("malformed Cartan type '" + std::string(text) + "'");
      return std::stoi(part.substr(start, at - start));
    };
    c.rank = read_int(i);
    if (c.family == Family::I) {
      if (c.rank != 2 || i >= part.size() || part[i] != '(')
        throw InvalidType("dihedral types are written I2(m), got '" + part + "'");
      ++i;
      c.m = read_int(i);
      if (i >= part.size() || part[i] != ')') throw InvalidType("missing ')' in '" + part + "'");
      ++i;
    }
    if (i != part.size()) throw InvalidType("trailing characters in '" + part + "'");
    validate(c);
    comps.push_back(c);
    if (end == s.size()) break;
    pos = end + 1;
  }
  return CartanType(std::move(comps));
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

bool CartanType::is_crystallographic() const {
  for (const auto& c : components_) {
    if (c.family == Family::H) return false;
    if (c.family == Family::I && c.m != 3 && c.m != 4 && c.m != 6) return false;
  }
  return true;
}

std::string CartanType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "x";
    s += components_[i].to_string();
  }
  return s.empty() ? "trivial" : s;
}

Integer CartanType::expected_order() const {
  Integer r = 1;
  for (const auto& c : components_) r *= component_order(c);
  return r;
}

CartanType CartanType::dual() const {
  std::vector<CartanComponent> d = components_;
  for (auto& c : d) {
    if (c.family == Family::B)
      c.family = Family::C;
    else if (c.family == Family::C)
      c.family = Family::B;
  }
  return CartanType(std::move(d));
}

Matrix<Cyclotomic> standard_cartan_matrix(const CartanComponent& c) {
  validate(c);
  const int n = c.rank;
  Matrix<Cyclotomic> a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto edge = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (c.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
    case Family::H:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::I:
      break;
  }
  switch (c.family) {
    case Family::B: a(n - 2, n - 1) = -2; break;
    case Family::C: a(n - 1, n - 2) = -2; break;
    case Family::F: a(1, 2) = -2; break;
    case Family::G: a(1, 0) = -3; break;
    case Family::H: {
      // -2cos(pi/5) = zeta_5^2 + zeta_5^3
      const Cyclotomic g = Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3);
      a(0, 1) = a(1, 0) = g;
      break;
    }
    case Family::I:
      // Odd m: both simple roots are conjugate, so the matrix is symmetric
      // with -2cos(pi/m) = 2cos(2pi((m-1)/2)/m).  Even m: -1 and -4cos^2(pi/m).
      if (c.m % 2 == 1) {
        a(0, 1) = a(1, 0) = Cyclotomic::two_cos(c.m, (c.m - 1) / 2);
      } else {
        a(0, 1) = -1;
        a(1, 0) = Cyclotomic(-2) - Cyclotomic::two_cos(c.m, 1);
      }
      break;
    default: break;
  }
  return a;
}

int coxeter_order_from_product(const Cyclotomic& p) {
  if (p.is_rational()) {
    const Rational& r = p.rational();
    if (r == 0) return 2;
    if (r == 1) return 3;
    if (r == 2) return 4;
    if (r == 3) return 6;
    if (r >= 4) return 0;  // infinite order
  }
  // 4cos^2(pi/m) = 2 + 2cos(2pi/m); 2cos(2pi/m) has conductor m or m/2.
  const Cyclotomic t = p - Cyclotomic(2);
  const int n = p.conductor();
  for (int m : {n, 2 * n}) {
    if (m >= 5 && Cyclotomic::two_cos(m, 1) == t) return m;
  }
  throw InvalidType("Cartan product " + p.to_string() + " is not 4cos^2(pi/m)");
}

RootDatum::RootDatum(Matrix<Cyclotomic> cartan, std::optional<CartanType> type)
    : cartan_(std::move(cartan)) {
  const int n = static_cast<int>(cartan_.rows());
  if (cartan_.cols() != cartan_.rows()) throw InvalidType("Cartan matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (cartan_(i, i) != Cyclotomic(2)) throw InvalidType("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Cyclotomic& x = cartan_(i, j);
      if (!x.is_real() || x.real_value() > 0) throw InvalidType("off-diagonal Cartan entries must be non-positive");
      if (x.is_zero() != cartan_(j, i).is_zero()) throw InvalidType("Cartan matrix zero pattern must be symmetric");
    }
    for (int j = 0; j < n; ++j) conductor_ = std::lcm(conductor_, cartan_(i, j).conductor());
  }
  coxeter_ = coxeter_from_cartan(cartan_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coxeter_[i][j] == 0) throw InvalidType("Cartan matrix is not of finite type");

  if (type) {
    type_ = *type;
    int offset = 0;
    for (const auto& c : type_.components()) {
      ComponentEmbedding e{c, {}};
      for (int i = 0; i < c.rank; ++i) e.generators.push_back(offset + i);
      offset += c.rank;
      components_.push_back(std::move(e));
    }
  } else {
    components_ = classify(cartan_, coxeter_);
    std::vector<CartanComponent> comps;
    for (const auto& e : components_) comps.push_back(e.type);
    type_ = CartanType(std::move(comps));
  }

  // Closure of the simple roots under simple reflections.  For a positive
  // root beta != alpha_i, s_i(beta) is again positive.
  std::unordered_map<std::string, int> index;
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Cyclotomic> e(n, Cyclotomic(0));
    e[i] = 1;
    index.emplace(root_key(e, conductor_), i);
    positive_roots_.push_back(std::move(e));
    queue.push_back(i);
  }
  constexpr std::size_t kMaxRoots = 4096;
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      if (r == i) continue;
      std::vector<Cyclotomic> img = reflect(i, positive_roots_[r]);
      if (first_sign(img) <= 0) throw InternalError("reflection of a positive root became negative");
      std::string key = root_key(img, conductor_);
      if (index.count(key)) continue;
      index.emplace(std::move(key), static_cast<int>(positive_roots_.size()));
      queue.push_back(static_cast<int>(positive_roots_.size()));
      positive_roots_.push_back(std::move(img));
      if (positive_roots_.size() > kMaxRoots) throw InvalidType("root system is not finite");
    }
  }
}

RootDatum RootDatum::from_type(const CartanType& type) {
  const int n = type.rank();
  Matrix<Cyclotomic> a(n, n);
  int offset = 0;
  for (const auto& c : type.components()) {
    const Matrix<Cyclotomic> block = standard_cartan_matrix(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) a(offset + i, offset + j) = block(i, j);
    offset += c.rank;
  }
  return RootDatum(std::move(a), type);
}

RootDatum RootDatum::from_cartan(Matrix<Cyclotomic> cartan) { return RootDatum(std::move(cartan), std::nullopt); }

std::vector<Cyclotomic> RootDatum::reflect(int i, const std::vector<Cyclotomic>& root) const {
  Cyclotomic pairing(0);
  for (int j = 0; j < rank(); ++j)
    if (!root[j].is_zero()) pairing += root[j] * cartan_(j, i);
  std::vector<Cyclotomic> out = root;
  out[i] -= pairing;
  return out;
}

Matrix<Cyclotomic> RootDatum::reflection_matrix(int i) const {
  const int n = rank();
  Matrix<Cyclotomic> s = Matrix<Cyclotomic>::identity(n);
  for (int j = 0; j < n; ++j) s(i, j) = s(i, j) - cartan_(j, i);
  return s;
}

RootDatum RootDatum::restrict_to(const std::vector<int>& J) const {
  const int k = static_cast<int>(J.size());
  for (int j : J)
    if (j < 0 || j >= rank()) throw DomainError("parabolic index out of range");
  Matrix<Cyclotomic> a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = cartan_(J[i], J[j]);
  return from_cartan(std::move(a));
}

DualityMap dualize(const RootDatum& datum) {
  RootDatum target = RootDatum::from_type(datum.type().dual());
  const int n = datum.rank();
  const auto& src = datum.cartan_matrix();
  const auto& tgt = target.cartan_matrix();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  // Identity-first backtracking for sigma with tgt(sigma i, sigma j) = src(j, i).
  std::function<bool(int)> search = [&](int i) {
    if (i == n) return true;
    for (int step = 0; step < n; ++step) {
      const int c = (i + step) % n;
      if (used[c]) continue;
      bool ok = tgt(c, c) == src(i, i);
      for (int p = 0; p < i && ok; ++p)
        ok = tgt(c, map[p]) == src(p, i) && tgt(map[p], c) == src(i, p);
      if (!ok) continue;
      used[c] = true;
      map[i] = c;
      if (search(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!search(0)) throw InternalError("no generator bijection realizes the dual Cartan matrix");
  return DualityMap{datum, std::move(target), std::move(map)};
}

}  // namespace weylhc
