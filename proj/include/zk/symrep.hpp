#pragma once

// Characters of the symmetric groups: partitions, Murnaghan–Nakayama values,
// inner products, induction by class fusion and the Pieri rule.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zk/perm.hpp"
#include "zk/scalar.hpp"

namespace zk {

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Sorts the parts and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return int(parts_.size()); }
  /// Part i (0-based), 0 past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  Partition conjugate() const;
  /// "(3,1,1)", "()" for the empty partition.
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions(int n);

Integer factorial(int n);
/// z_λ = Π i^{m_i} m_i!, the centraliser order of an element of cycle type λ.
Integer centralizer_order(const Partition& lambda);
/// n! / z_λ.
Integer class_size(const Partition& lambda);
/// Dimension of the irreducible V_λ by the hook length formula.
Integer hook_dim(const Partition& lambda);
/// Sign of a permutation of cycle type μ.
int cycle_type_sign(const Partition& mu);
Partition cycle_type_of(const Permutation& g);

/// χ_λ(μ) by the Murnaghan–Nakayama rule on beta-numbers. Memoised per thread.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// A class function on Σ_n, stored by cycle type. Missing classes are zero.
struct SymClassFunction {
  int n = 0;
  std::map<Partition, Rational> values;

  Rational at(const Partition& mu) const;
  Rational degree() const;
};

SymClassFunction irreducible_character(const Partition& lambda);
/// (1/n!) Σ_μ |C_μ| χ(μ) ψ(μ); all values are rational so no conjugation.
Rational inner_product(const SymClassFunction& a, const SymClassFunction& b);

/// Irreducible multiplicities keyed by partition. In padded coordinates the
/// key is the unpadded partition λ standing for V(λ)_m.
using Decomposition = std::map<Partition, std::int64_t>;

/// Multiplicities ⟨χ, χ_λ⟩; throws NotACharacter unless every one is a
/// nonnegative integer.
Decomposition decompose(const SymClassFunction& chi);
/// Σ_λ c_λ χ_λ.
SymClassFunction character_of(const Decomposition& d, int n);
/// Σ_λ c_λ dim V_λ.
Integer decomposition_dim(const Decomposition& d);

inline constexpr int kDefaultBruteCap = 8;

/// Induction from an explicit subgroup H ≤ Σ_n (all elements listed, degree n)
/// by class fusion: Ind χ(μ) = z_μ Σ_{h ∈ H of type μ} χ(h) / |H|.
/// Throws CapExceeded for n > cap and Validation if H is not a subgroup or
/// the character is missing an element.
SymClassFunction induce_to_sym(const std::vector<Permutation>& h,
                               const std::map<Permutation, Rational>& chi,
                               int cap = kDefaultBruteCap);

/// Ind_{Σ_b × Σ_{m-b}}^{Σ_m} (ψ ⊠ trivial) by class fusion through the Young
/// subgroup: value at ν is z_ν Σ_{α ∪ β = ν} ψ(α) / (z_α z_β).
SymClassFunction induce_young(const SymClassFunction& psi, int m);

/// λ ⊢ m obtained from μ by adding a horizontal strip of m - |μ| boxes.
std::vector<Partition> pieri_induce(const Partition& mu, int m);

/// λ[m] = (m - |λ|, λ_1, ..): throws Validation outside the stable range.
struct PaddedPartition {
  Partition base;
  int m = 0;

  Partition realized() const;
  std::string str() const;
};

PaddedPartition pad(const Partition& lambda, int m);
/// Drops the first part.
Partition unpad(const Partition& nu);

/// Re-keys a Σ_m decomposition by unpadded partitions.
Decomposition to_padded(const Decomposition& d);
/// Max |λ| over constituents of a padded decomposition, 0 if empty.
int weight(const Decomposition& padded);

}  // namespace zk
