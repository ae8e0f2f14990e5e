#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

#include "chartab_internal.hpp"
#include "weylhc/error.hpp"

namespace weylhc::detail {

namespace {

void partitions_into(int n, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

// Partitions obtained by removing a rim hook of length r, each with the sign
// (-1)^(leg length).  Works on beta-sets: a hook is a bead moving down by r.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r) {
  const int l = static_cast<int>(lambda.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < l; ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Partition p;
    for (int j = 0; j < l; ++j) {
      const int part = nb[j] - (l - 1 - j);
      if (part > 0) p.push_back(part);
    }
    out.emplace_back(std::move(p), between % 2 == 0 ? 1 : -1);
  }
  return out;
}

int size_of(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

// Signed permutation on n letters: image[i] = +-(j+1) when w(e_i) = +-e_j.
struct SignedPerm {
  std::vector<int> image;
  explicit SignedPerm(int n) : image(n) {
    for (int i = 0; i < n; ++i) image[i] = i + 1;
  }
  // Cycles as (length, product of signs).
  std::vector<std::pair<int, int>> cycles() const {
    const int n = static_cast<int>(image.size());
    std::vector<bool> seen(n, false);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0, sign = 1, j = i;
      while (!seen[j]) {
        seen[j] = true;
        ++len;
        if (image[j] < 0) sign = -sign;
        j = std::abs(image[j]) - 1;
      }
      out.emplace_back(len, sign);
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.first > b.first || (a.first == b.first && a.second > b.second); });
    return out;
  }
};

// Right multiplication by a standard generator of W(B_n) or W(D_n).
void apply_generator(SignedPerm& w, int i, bool type_d) {
  const int n = static_cast<int>(w.image.size());
  if (i < 0 || i >= n) throw DomainError("generator index out of range");
  if (i < n - 1) {
    std::swap(w.image[i], w.image[i + 1]);
  } else if (!type_d) {
    w.image[n - 1] = -w.image[n - 1];
  } else {
    const int a = w.image[n - 2], b = w.image[n - 1];
    w.image[n - 2] = -b;
    w.image[n - 1] = -a;
  }
}

class SymmetricComponent : public ComponentCharacters {
 public:
  explicit SymmetricComponent(int n) : n_(n), parts_(partitions(n + 1)) {
    for (const auto& p : parts_) labels_.push_back(partition_label(p));
  }
  std::vector<Cyclotomic> values(const std::vector<int>& word) const override {
    std::vector<int> perm(n_ + 1);
    for (int i = 0; i <= n_; ++i) perm[i] = i;
    for (int g : word) {
      if (g < 0 || g >= n_) throw DomainError("generator index out of range");
      std::swap(perm[g], perm[g + 1]);
    }
    std::vector<bool> seen(n_ + 1, false);
    std::vector<int> cycles;
    for (int i = 0; i <= n_; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    std::vector<Cyclotomic> out;
    for (const auto& p : parts_) out.emplace_back(symmetric_character(p, cycles));
    return out;
  }

 private:
  int n_;
  std::vector<Partition> parts_;
};

std::vector<std::pair<Partition, Partition>> bipartitions(int n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : partitions(k))
      for (const auto& b : partitions(n - k)) out.emplace_back(a, b);
  return out;
}

std::string bipartition_label(const Partition& a, const Partition& b) {
  return "(" + partition_label(a) + "," + partition_label(b) + ")";
}

class HyperoctahedralComponent : public ComponentCharacters {
 public:
  explicit HyperoctahedralComponent(int n) : n_(n), bips_(bipartitions(n)) {
    for (const auto& [a, b] : bips_) labels_.push_back(bipartition_label(a, b));
  }
  std::vector<Cyclotomic> values(const std::vector<int>& word) const override {
    SignedPerm w(n_);
    for (int g : word) apply_generator(w, g, false);
    const auto cyc = w.cycles();
    std::vector<Cyclotomic> out;
    for (const auto& [a, b] : bips_) out.emplace_back(hyperoctahedral_character(a, b, cyc));
    return out;
  }

 private:
  int n_;
  std::vector<std::pair<Partition, Partition>> bips_;
};

// W(D_n) as the index-two subgroup of W(B_n).  A pair {lambda, mu} with
// lambda != mu restricts irreducibly; {lambda, lambda} splits into two
// characters that differ only on the split classes (all cycles positive and
// of even length).  On those, chi_+- = chi^B / 2 +- tau 2^(l(nu)-1) chi_lambda(nu),
// where the cycle lengths are 2nu and tau = +1 on the class of the plain
// permutations.
class DemihyperoctahedralComponent : public ComponentCharacters {
 public:
  explicit DemihyperoctahedralComponent(int n) : n_(n) {
    for (const auto& [a, b] : bipartitions(n)) {
      const auto ka = std::make_tuple(size_of(a), a), kb = std::make_tuple(size_of(b), b);
      if (ka > kb) {
        chars_.push_back({a, b, 0});
        labels_.push_back("{" + partition_label(a) + "," + partition_label(b) + "}");
      } else if (a == b) {
        for (int s : {1, -1}) {
          chars_.push_back({a, b, s});
          labels_.push_back("{" + partition_label(a) + "," + partition_label(b) + "}" + (s > 0 ? "+" : "-"));
        }
      }
    }
  }
  std::vector<Cyclotomic> values(const std::vector<int>& word) const override {
    SignedPerm w(n_);
    for (int g : word) apply_generator(w, g, true);
    const auto cyc = w.cycles();
    bool split = true;
    std::vector<int> nu;
    for (const auto& [len, sign] : cyc) {
      if (sign < 0 || len % 2 != 0) split = false;
      nu.push_back(len / 2);
    }
    int tau = 1;
    if (split) {
      // Conjugate by a diagonal sign change d making every sign positive; the
      // element is D-conjugate to a plain permutation iff d lies in W(D_n).
      const int n = n_;
      std::vector<int> d(n, 0);
      int negatives = 0;
      for (int i = 0; i < n; ++i) {
        if (d[i] != 0) continue;
        d[i] = 1;
        int j = i;
        while (true) {
          const int next = std::abs(w.image[j]) - 1;
          const int eps = w.image[j] < 0 ? -1 : 1;
          if (next == i) break;
          d[next] = d[j] * eps;
          j = next;
        }
      }
      for (int x : d)
        if (x < 0) ++negatives;
      tau = negatives % 2 == 0 ? 1 : -1;
    }
    std::vector<Cyclotomic> out;
    for (const auto& c : chars_) {
      const long b = hyperoctahedral_character(c.lambda, c.mu, cyc);
      if (c.split == 0) {
        out.emplace_back(b);
        continue;
      }
      Rational v = fraction(b, 2);
      if (split) {
        const long extra = (1L << (nu.size() - 1)) * symmetric_character(c.lambda, nu);
        v += Rational(c.split * tau * extra);
      }
      out.emplace_back(v);
    }
    return out;
  }

 private:
  struct Char {
    Partition lambda, mu;
    int split;  // 0, or +-1 for the two halves of {lambda, lambda}
  };
  int n_;
  std::vector<Char> chars_;
};

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

std::string partition_label(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

long symmetric_character(const Partition& lambda, const std::vector<int>& cycles) {
  thread_local std::map<std::pair<Partition, std::vector<int>>, long> memo;
  if (cycles.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, cycles);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());
  long v = 0;
  for (const auto& [mu, sign] : remove_rim_hooks(lambda, cycles[0])) v += sign * symmetric_character(mu, rest);
  memo.emplace(std::move(key), v);
  return v;
}

long hyperoctahedral_character(const Partition& lambda, const Partition& mu,
                               const std::vector<std::pair<int, int>>& cycles) {
  thread_local std::map<std::tuple<Partition, Partition, std::vector<std::pair<int, int>>>, long> memo;
  if (cycles.empty()) return lambda.empty() && mu.empty() ? 1 : 0;
  auto key = std::make_tuple(lambda, mu, cycles);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const auto [len, eps] = cycles[0];
  const std::vector<std::pair<int, int>> rest(cycles.begin() + 1, cycles.end());
  long v = 0;
  for (const auto& [l2, sign] : remove_rim_hooks(lambda, len)) v += sign * hyperoctahedral_character(l2, mu, rest);
  for (const auto& [m2, sign] : remove_rim_hooks(mu, len)) v += eps * sign * hyperoctahedral_character(lambda, m2, rest);
  memo.emplace(std::move(key), v);
  return v;
}

std::shared_ptr<const ComponentCharacters> symmetric_component(int n) {
  return std::make_shared<SymmetricComponent>(n);
}
std::shared_ptr<const ComponentCharacters> hyperoctahedral_component(int n) {
  return std::make_shared<HyperoctahedralComponent>(n);
}
std::shared_ptr<const ComponentCharacters> demihyperoctahedral_component(int n) {
  return std::make_shared<DemihyperoctahedralComponent>(n);
}

std::vector<ClassFunction> dihedral_rows(const CoxeterGroup& W, int m, std::vector<std::string>& labels) {
  // Element rho^r s^f as (r, f) with s = (0, 1), t = (m - 1, 1), st = rho.
  struct Linear {
    int at_s, at_t;
    const char* name;
  };
  std::vector<Linear> linear = {{1, 1, "triv"}, {-1, -1, "sign"}};
  if (m % 2 == 0) {
    linear.push_back({1, -1, "eps_t"});
    linear.push_back({-1, 1, "eps_s"});
  }
  const int two_dim = (m - 1) / 2;
  std::vector<ClassFunction> rows(linear.size() + two_dim);
  labels.clear();
  for (const auto& l : linear) labels.push_back(l.name);
  for (int j = 1; j <= two_dim; ++j) labels.push_back("rho_" + std::to_string(j));
  for (const auto& cls : W.conjugacy_classes()) {
    int r = 0, f = 0;
    for (int g : W.word(cls.representative)) {
      const int r2 = g == 0 ? 0 : m - 1;
      r = ((r + (f ? -r2 : r2)) % m + m) % m;
      f ^= 1;
    }
    for (std::size_t a = 0; a < linear.size(); ++a) {
      const int st = linear[a].at_s * linear[a].at_t;
      int v = (r % 2 == 0) ? 1 : st;
      if (f) v *= linear[a].at_s;
      rows[a].emplace_back(v);
    }
    for (int j = 1; j <= two_dim; ++j)
      rows[linear.size() + j - 1].push_back(f ? Cyclotomic(0) : Cyclotomic::two_cos(m, static_cast<long>(j) * r));
  }
  return rows;
}

}  // namespace weylhc::detail
