#include "zk/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "zk/error.hpp"

namespace zk {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    require(x >= 0 && x < int(images_.size()) && !hit[x], "not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int a = c[k] - 1, b = c[(k + 1) % c.size()] - 1;
      require(a >= 0 && a < n && b >= 0 && b < n && !used[a], "bad cycle notation");
      used[a] = true;
      im[a] = b;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& h) const {
  require(degree() == h.degree(), "degree mismatch in composition");
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = images_[h.images_[i]];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = int(i);
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::extended(int n) const {
  require(n >= degree(), "cannot shrink a permutation");
  std::vector<int> im(images_);
  for (int i = degree(); i < n; ++i) im.push_back(i);
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != int(i)) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = int(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type()) {
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string Permutation::str() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == int(i)) continue;
    s += "(";
    for (int j = int(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (s.back() != '(') s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "(1)" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  return boost::hash_range(p.images().begin(), p.images().end());
}

PermGroup::PermGroup(int m, std::vector<Permutation> gens) : degree(m) {
  for (auto& g : gens) {
    require(g.degree() == m, "generator degree mismatch");
    if (!g.is_identity() &&
        std::find(generators.begin(), generators.end(), g) == generators.end()) {
      generators.push_back(std::move(g));
    }
  }
}

PermGroup PermGroup::symmetric(int m) {
  if (m < 2) return PermGroup(m, {});
  std::vector<int> cycle(m);
  std::iota(cycle.begin(), cycle.end(), 1);
  return PermGroup(m, {Permutation::from_cycles(m, {{1, 2}}), Permutation::from_cycles(m, {cycle})});
}

std::vector<Permutation> enumerate_group(const std::vector<Permutation>& gens, int degree,
                                         std::size_t cap) {
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen(elements.begin(), elements.end());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = g * elements[head];
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          fail(ErrorKind::CapExceeded,
               "group enumeration exceeded cap of " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

VertexMap vertex_map(const Permutation& g, const SimplicialComplex& k) {
  require(g.degree() >= k.max_index(),
          "permutation degree " + std::to_string(g.degree()) + " below vertex index " +
              std::to_string(k.max_index()));
  VertexMap map(k.vertex_count());
  for (std::size_t p = 0; p < map.size(); ++p) {
    VertexLabel v = k.vertices()[p];
    if (v.index) v.index = g(*v.index - 1) + 1;
    auto q = k.position(v);
    require(q.has_value(), "image of vertex " + k.vertices()[p].str() + " is not a vertex");
    map[p] = *q;
  }
  return map;
}

VertexSet map_subset(const VertexMap& map, VertexSet j) {
  VertexSet out = 0;
  while (j) {
    out |= VertexSet{1} << map[__builtin_ctzll(j)];
    j &= j - 1;
  }
  return out;
}

int order_sign(const VertexMap& map, VertexSet j) {
  const auto elems = set_elements(j);
  int inversions = 0;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      if (map[elems[a]] > map[elems[b]]) ++inversions;
    }
  }
  return inversions % 2 ? -1 : 1;
}

VertexSet act_on_subset(const Permutation& g, VertexSet j, const SimplicialComplex& k) {
  require(is_subset(j, k.all_vertices()), "subset outside vertex set");
  return map_subset(vertex_map(g, k), j);
}

bool is_g_complex(const SimplicialComplex& k, const PermGroup& g) {
  for (const auto& gen : g.generators) {
    VertexMap map;
    try {
      map = vertex_map(gen, k);
    } catch (const Error&) {
      return false;
    }
    for (VertexSet f : k.facets()) {
      if (!k.contains(map_subset(map, f))) return false;
    }
  }
  return true;
}

std::size_t OrbitTable::orbit_of(VertexSet j) const {
  auto it = member_.find(j);
  require(it != member_.end(), "subset not covered by orbit table");
  return it->second.orbit;
}

const Permutation& OrbitTable::transversal(VertexSet j) const {
  auto it = member_.find(j);
  require(it != member_.end(), "subset not covered by orbit table");
  return it->second.transversal;
}

std::vector<VertexSet> OrbitTable::members(std::size_t o) const { return orbit_members_.at(o); }

namespace {

std::size_t binomial_sum(int n, int max_size) {
  std::size_t total = 0, c = 1;
  for (int s = 0; s <= max_size && s <= n; ++s) {
    total += c;
    c = c * std::size_t(n - s) / std::size_t(s + 1);
  }
  return total;
}

}  // namespace

OrbitTable subset_orbit_reps(const SimplicialComplex& k, const PermGroup& g, int max_size,
                             std::size_t cap) {
  const int n = int(k.vertex_count());
  if (max_size < 0 || max_size > n) max_size = n;
  if (binomial_sum(n, max_size) > cap) {
    fail(ErrorKind::CapExceeded, "subset enumeration exceeds cap of " + std::to_string(cap));
  }
  std::vector<VertexMap> maps;
  for (const auto& gen : g.generators) maps.push_back(vertex_map(gen, k));
  const Permutation id = Permutation::identity(g.degree);

  OrbitTable table;
  for (int size = 0; size <= max_size; ++size) {
    for_each_combination(n, size, [&](VertexSet start) {
      if (table.member_.count(start)) return;
      const std::size_t o = table.orbits_.size();
      std::vector<VertexSet> members{start};
      table.member_.emplace(start, OrbitTable::Entry{o, id});
      std::set<Permutation> schreier;
      for (std::size_t head = 0; head < members.size(); ++head) {
        const VertexSet cur = members[head];
        const Permutation t = table.member_.at(cur).transversal;
        for (std::size_t s = 0; s < maps.size(); ++s) {
          const VertexSet next = map_subset(maps[s], cur);
          auto it = table.member_.find(next);
          if (it == table.member_.end()) {
            table.member_.emplace(next, OrbitTable::Entry{o, g.generators[s] * t});
            members.push_back(next);
          } else {
            Permutation h = it->second.transversal.inverse() * g.generators[s] * t;
            if (!h.is_identity()) schreier.insert(std::move(h));
          }
        }
      }
      table.orbits_.push_back(
          Orbit{start, members.size(), std::vector<Permutation>(schreier.begin(), schreier.end())});
      table.orbit_members_.push_back(std::move(members));
    });
  }
  return table;
}

SupportSplit support_split(VertexSet j, const SimplicialComplex& k, int m, int cap) {
  require(is_subset(j, k.all_vertices()), "support_split: J outside vertex set");
  require(m >= k.max_index(), "support_split: m below the largest vertex index");
  SupportSplit out;
  for (const auto& v : k.labels_of(j)) {
    if (v.index) out.support.push_back(*v.index);
  }
  std::sort(out.support.begin(), out.support.end());
  out.support.erase(std::unique(out.support.begin(), out.support.end()), out.support.end());
  const int b = int(out.support.size());
  if (b > cap) {
    fail(ErrorKind::CapExceeded, "support of size " + std::to_string(b) +
                                     " exceeds brute-force cap " + std::to_string(cap));
  }
  out.complement_rank = m - b;
  std::vector<int> arrangement(b);
  std::iota(arrangement.begin(), arrangement.end(), 0);
  do {
    std::vector<int> im(m);
    std::iota(im.begin(), im.end(), 0);
    for (int a = 0; a < b; ++a) im[out.support[a] - 1] = out.support[arrangement[a]] - 1;
    Permutation g(std::move(im));
    if (act_on_subset(g, j, k) == j) out.finite_part.push_back(std::move(g));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

}  // namespace zk
