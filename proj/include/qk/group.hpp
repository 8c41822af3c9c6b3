#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qk/perm.hpp"

namespace qk {

/// Order cap when materializing a group as a full multiplication table
/// (the table is quadratic in the order).
inline constexpr std::size_t kDefaultTableCap = 4096;

/// Order cap for exhaustive subgroup/element enumerations.
inline constexpr std::size_t kDefaultGroupCap = 20000;

/// Finite group as a multiplication table. The identity is normalized to
/// index 0 on construction (elements are relabeled if needed). Instances are
/// immutable after construction.
struct ExplicitGroup {
  int n = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> inverse;
  std::vector<std::string> labels;  // empty or size n

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  /// g x g^-1
  int conj(int g, int x) const { return table[table[g][x]][inverse[g]]; }
  std::string label(int a) const {
    return labels.empty() ? std::to_string(a) : labels[a];
  }
};

/// Validate and normalize a multiplication table. Associativity is fully
/// checked for n <= 512 (or when `strict`), sampled on 10000 deterministic
/// triples above that.
ExplicitGroup make_group(std::vector<std::vector<int>> table,
                         std::vector<std::string> labels = {},
                         bool strict = false);

ExplicitGroup cyclic_group(int n);
ExplicitGroup direct_product(const ExplicitGroup& a, const ExplicitGroup& b);

/// Closure of permutation generators into an explicit table; elements are
/// labeled by cycle notation. Throws CapExceeded past `cap`.
/// Optionally returns the element permutations through `elements_out`.
ExplicitGroup group_from_permutations(int degree, const std::vector<Perm>& gens,
                                      std::size_t cap = kDefaultTableCap,
                                      std::vector<Perm>* elements_out = nullptr);

/// Automorphism of an ExplicitGroup as an image array.
struct GroupAutomorphism {
  std::vector<int> images;
  std::optional<int> inner_witness;  // g with theta = conjugation by g

  int operator()(int x) const { return images[x]; }
};

GroupAutomorphism identity_automorphism(const ExplicitGroup& G);
GroupAutomorphism inner_automorphism(const ExplicitGroup& G, int g);
/// Validates bijectivity and the homomorphism law on all pairs.
GroupAutomorphism automorphism_from_images(const ExplicitGroup& G,
                                           std::vector<int> images);

int automorphism_order(const GroupAutomorphism& theta);
GroupAutomorphism compose(const ExplicitGroup& G, const GroupAutomorphism& a,
                          const GroupAutomorphism& b);
/// Fix(theta) = { x : theta(x) = x }, sorted; always a subgroup.
std::vector<int> fixed_elements(const GroupAutomorphism& theta);

/// Conjugacy class: representative is the least member.
struct ConjClass {
  int representative;
  std::vector<int> members;  // sorted
};

std::vector<ConjClass> conjugacy_classes(const ExplicitGroup& G);
ConjClass conjugacy_class_of(const ExplicitGroup& G, int x);

/// Sorted element set of a subgroup.
struct SubgroupView {
  std::vector<int> elements;  // sorted ascending; contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
};

SubgroupView whole_group(const ExplicitGroup& G);
SubgroupView trivial_subgroup();
/// { g : g x = x g }
SubgroupView centralizer(const ExplicitGroup& G, int x);
/// { g : g <x> g^-1 = <x> }
SubgroupView normalizer_of_cyclic(const ExplicitGroup& G, int x);
/// Closure of a nonempty seed set under multiplication.
SubgroupView generated_subgroup(const ExplicitGroup& G,
                                const std::vector<int>& seeds);
bool is_normal_subgroup(const ExplicitGroup& G, const SubgroupView& H);

/// H as a standalone group; new index i corresponds to H.elements[i].
ExplicitGroup subgroup_as_group(const ExplicitGroup& G, const SubgroupView& H);

/// Pairs (g, theta^k) with (g,theta^k)(h,theta^m) = (g theta^k(h), theta^{k+m});
/// index of (g, theta^k) is k*|G| + g.
ExplicitGroup semidirect_with_automorphism(const ExplicitGroup& G,
                                           const GroupAutomorphism& theta);

int element_order(const ExplicitGroup& G, int x);

// number-theory helpers
std::vector<int> prime_support(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
std::uint64_t p_part(std::uint64_t n, int p);
bool is_prime(std::uint64_t n);

/// Every prime dividing the order of x lies in pi.
bool is_pi_element(const ExplicitGroup& G, int x, const std::vector<int>& pi);

}  // namespace qk
