#include "zk/symrep.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "zk/error.hpp"

namespace zk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] >= 1, "partition parts must be positive");
    require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  require(n >= 0, "partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer centralizer_order(const Partition& lambda) {
  Integer z = 1;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const int mult = int(j - i);
    for (int k = 0; k < mult; ++k) z *= p[i];
    z *= factorial(mult);
    i = j;
  }
  return z;
}

Integer class_size(const Partition& lambda) {
  return factorial(lambda.size()) / centralizer_order(lambda);
}

Integer hook_dim(const Partition& lambda) {
  const Partition c = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (c[j] - i - 1) + 1;
  }
  return factorial(lambda.size()) / hooks;
}

int cycle_type_sign(const Partition& mu) {
  int s = 1;
  for (int p : mu.parts()) {
    if (p % 2 == 0) s = -s;
  }
  return s;
}

Partition cycle_type_of(const Permutation& g) { return Partition(g.cycle_type()); }

namespace {

/// Beta-set recursion: remove rim hooks of length mu[k], mu[k+1], ...
std::int64_t mn_beta(std::vector<int>& beta, const std::vector<int>& mu, std::size_t k,
                     std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  if (k == mu.size()) return 1;
  auto key = std::make_pair(beta, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu[k];
  std::int64_t total = 0;
  for (std::size_t a = 0; a < beta.size(); ++a) {
    const int from = beta[a], to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta) {
      if (b > to && b < from) ++between;
    }
    beta[a] = to;
    std::vector<int> sorted = beta;
    std::sort(sorted.begin(), sorted.end());
    const std::int64_t sub = mn_beta(sorted, mu, k + 1, memo);
    beta[a] = from;
    total += (between % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  require(lambda.size() == mu.size(), "mn_character: size mismatch");
  // One memo per cycle type; beta-sets of a fixed length identify partitions.
  thread_local std::map<std::vector<int>,
                        std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>>
      memos;
  const int l = lambda.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
  std::sort(beta.begin(), beta.end());
  return mn_beta(beta, mu.parts(), 0, memos[mu.parts()]);
}

Rational SymClassFunction::at(const Partition& mu) const {
  auto it = values.find(mu);
  return it == values.end() ? Rational(0) : it->second;
}

Rational SymClassFunction::degree() const {
  return at(Partition(std::vector<int>(std::size_t(n), 1)));
}

SymClassFunction irreducible_character(const Partition& lambda) {
  SymClassFunction chi{lambda.size(), {}};
  for (const auto& mu : partitions(chi.n)) chi.values.emplace(mu, Rational(mn_character(lambda, mu)));
  return chi;
}

Rational inner_product(const SymClassFunction& a, const SymClassFunction& b) {
  require(a.n == b.n, "inner_product: degree mismatch");
  Rational total = 0;
  for (const auto& [mu, va] : a.values) {
    const Rational vb = b.at(mu);
    if (va != 0 && vb != 0) total += va * vb / Rational(centralizer_order(mu));
  }
  return total;
}

Decomposition decompose(const SymClassFunction& chi) {
  Decomposition out;
  for (const auto& lambda : partitions(chi.n)) {
    Rational c = 0;
    for (const auto& [mu, v] : chi.values) {
      if (v != 0) c += v * mn_character(lambda, mu) / Rational(centralizer_order(mu));
    }
    if (!is_integer(c) || c < 0) {
      fail(ErrorKind::NotACharacter, "multiplicity of " + lambda.str() + " in class function on S_" +
                                         std::to_string(chi.n) + " is " + to_string(c));
    }
    if (c != 0) out.emplace(lambda, static_cast<std::int64_t>(numerator(c)));
  }
  return out;
}

SymClassFunction character_of(const Decomposition& d, int n) {
  SymClassFunction chi{n, {}};
  for (const auto& mu : partitions(n)) {
    Rational v = 0;
    for (const auto& [lambda, c] : d) {
      require(lambda.size() == n, "character_of: partition size mismatch");
      v += Rational(c) * mn_character(lambda, mu);
    }
    chi.values.emplace(mu, v);
  }
  return chi;
}

Integer decomposition_dim(const Decomposition& d) {
  Integer total = 0;
  for (const auto& [lambda, c] : d) total += hook_dim(lambda) * c;
  return total;
}

namespace {

/// True iff the listed elements form a group: closure of a greedily chosen
/// generating subset reproduces the list exactly.
bool is_subgroup(const std::vector<Permutation>& h, int n) {
  const std::unordered_set<Permutation, PermutationHash> listed(h.begin(), h.end());
  if (listed.size() != h.size()) return false;
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> closure{Permutation::identity(n)};
  for (const auto& g : h) {
    if (closure.count(g)) continue;
    gens.push_back(g);
    const auto elements = enumerate_group(gens, n, h.size() + 1);
    if (elements.size() > h.size()) return false;
    closure = {elements.begin(), elements.end()};
  }
  if (closure.size() != listed.size()) return false;
  for (const auto& g : closure) {
    if (!listed.count(g)) return false;
  }
  return true;
}

}  // namespace

SymClassFunction induce_to_sym(const std::vector<Permutation>& h,
                               const std::map<Permutation, Rational>& chi, int cap) {
  require(!h.empty(), "induce_to_sym: empty subgroup");
  const int n = h.front().degree();
  if (n > cap) {
    fail(ErrorKind::CapExceeded, "induce_to_sym: degree " + std::to_string(n) +
                                     " exceeds brute-force cap " + std::to_string(cap));
  }
  for (const auto& g : h) require(g.degree() == n, "induce_to_sym: degree mismatch");
  try {
    require(is_subgroup(h, n), "induce_to_sym: element list is not closed under composition");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CapExceeded) {
      fail(ErrorKind::Validation, "induce_to_sym: element list is not closed under composition");
    }
    throw;
  }
  std::map<Partition, Rational> sums;
  for (const auto& g : h) {
    auto it = chi.find(g);
    require(it != chi.end(), "induce_to_sym: character missing element " + g.str());
    sums[cycle_type_of(g)] += it->second;
  }
  SymClassFunction out{n, {}};
  const Rational order(static_cast<long long>(h.size()));
  for (const auto& mu : partitions(n)) {
    out.values.emplace(mu, Rational(centralizer_order(mu)) * sums[mu] / order);
  }
  return out;
}

SymClassFunction induce_young(const SymClassFunction& psi, int m) {
  const int b = psi.n;
  require(m >= b, "induce_young: m below subgroup degree");
  std::map<Partition, Rational> sums;
  const auto betas = partitions(m - b);
  for (const auto& [alpha, v] : psi.values) {
    if (v == 0) continue;
    const Rational za(centralizer_order(alpha));
    for (const auto& beta : betas) {
      std::vector<int> merged = alpha.parts();
      merged.insert(merged.end(), beta.parts().begin(), beta.parts().end());
      sums[Partition::from_unsorted(std::move(merged))] +=
          v / (za * Rational(centralizer_order(beta)));
    }
  }
  SymClassFunction out{m, {}};
  for (const auto& nu : partitions(m)) {
    auto it = sums.find(nu);
    out.values.emplace(nu, it == sums.end() ? Rational(0) : Rational(centralizer_order(nu)) * it->second);
  }
  return out;
}

namespace {

void strip_rec(const Partition& mu, int row, int remaining, std::vector<int>& cur,
               std::vector<Partition>& out) {
  const int len = mu.length();
  if (row == len + 1) {
    if (remaining == 0) out.push_back(Partition::from_unsorted(cur));
    return;
  }
  // Row `row` may grow up to the original length of the row above.
  const int lo = mu[row];
  const int hi = row == 0 ? mu[0] + remaining : std::min(mu[row - 1], mu[row] + remaining);
  for (int v = hi; v >= lo; --v) {
    cur.push_back(v);
    strip_rec(mu, row + 1, remaining - (v - lo), cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> pieri_induce(const Partition& mu, int m) {
  require(m >= mu.size(), "pieri_induce: m below |mu|");
  std::vector<Partition> out;
  std::vector<int> cur;
  strip_rec(mu, 0, m - mu.size(), cur, out);
  std::sort(out.rbegin(), out.rend());
  return out;
}

Partition PaddedPartition::realized() const {
  std::vector<int> parts{m - base.size()};
  parts.insert(parts.end(), base.parts().begin(), base.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

std::string PaddedPartition::str() const { return realized().str(); }

PaddedPartition pad(const Partition& lambda, int m) {
  require(m - lambda.size() >= lambda[0],
          "pad: m = " + std::to_string(m) + " is outside the stable range of " + lambda.str());
  return PaddedPartition{lambda, m};
}

Partition unpad(const Partition& nu) {
  require(nu.length() >= 1, "unpad: empty partition");
  return Partition(std::vector<int>(nu.parts().begin() + 1, nu.parts().end()));
}

Decomposition to_padded(const Decomposition& d) {
  Decomposition out;
  for (const auto& [lambda, c] : d) out[unpad(lambda)] += c;
  return out;
}

int weight(const Decomposition& padded) {
  int w = 0;
  for (const auto& [lambda, c] : padded) {
    if (c != 0) w = std::max(w, lambda.size());
  }
  return w;
}

}  // namespace zk
