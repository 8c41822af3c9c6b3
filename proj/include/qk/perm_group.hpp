#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "qk/bigint.hpp"
#include "qk/partition.hpp"
#include "qk/perm.hpp"

namespace qk {

inline constexpr int kDefaultDegreeCap = 10000;

/// Equal-sized blocks preserved by a group action.
struct BlockSystem {
  Partition partition;
  int block_count;
  int block_size;
};

/// Permutation group given by generators, with a lazily built deterministic
/// base-and-strong-generating-set (BSGS) for order and membership.
///
/// The chain is deterministic: generators are processed in the order given,
/// base points are the smallest indices moved by the offending element, and
/// orbits are grown breadth-first with generators in list order. Instances
/// are immutable after construction; the lazy BSGS build is guarded by a
/// mutex, so sharing across threads is safe.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators,
            int degree_cap = kDefaultDegreeCap);
  static PermGroup trivial(int degree);

  PermGroup(const PermGroup& o);
  PermGroup& operator=(const PermGroup& o);
  PermGroup(PermGroup&&) = default;
  PermGroup& operator=(PermGroup&&) = default;

  int degree() const { return degree_; }
  /// Generators as given (identity elements dropped).
  const std::vector<Perm>& generators() const { return gens_; }
  /// Subset of the given generators that already generates the group;
  /// computed with the BSGS. Useful when the input list is long (e.g. one
  /// left translation per quandle element).
  const std::vector<Perm>& reduced_generators() const;

  const BigUInt& order() const;
  bool is_trivial() const { return order().is_one(); }
  bool contains(const Perm& p) const;

  /// Base points of the BSGS chain.
  std::vector<int> base() const;

  /// Orbit of a point, breadth-first over the generators; sorted ascending.
  std::vector<int> orbit(int point) const;
  /// Partition of the domain into orbits.
  Partition orbit_partition() const;
  bool is_transitive() const;

  /// Smallest subgroup containing `seeds` and closed under conjugation by
  /// this group. Seeds must have the same degree.
  PermGroup normal_closure(const std::vector<Perm>& seeds) const;

  PermGroup derived_subgroup() const;
  /// G >= G' >= G'' >= ... until the order stabilizes; the last entry is
  /// repeated-order-free (series stops at the first repeat or at 1).
  std::vector<PermGroup> derived_series() const;
  bool is_solvable() const;
  bool is_abelian() const;

  /// { h in G : h maps every point into its partition class }.
  /// Computed by stabilizing the classes (as set-points) at the front of a
  /// BSGS base over an extended domain. Classes that are not blocks are
  /// handled by closing the class collection under the group action; the
  /// collection is capped (CapExceeded).
  PermGroup kernel_of_action(const Partition& partition) const;

  /// Finest G-invariant partition identifying `a` and `b` (Atkinson).
  /// Throws NotTransitive when the group is not transitive.
  BlockSystem minimal_block_system(int a, int b) const;
  /// Transitive and only trivial minimal block systems. Degree-1 groups are
  /// primitive by convention.
  bool is_primitive() const;

  /// Stabilizer of a point, as the next group in a chain based at it.
  PermGroup point_stabilizer(int point) const;

  /// All elements, BSGS coset enumeration order; CapExceeded above `cap`.
  std::vector<Perm> elements(std::size_t cap) const;

 private:
  struct Chain;
  const Chain& ensure_chain() const;

  int degree_;
  std::vector<Perm> gens_;
  std::vector<int> forced_base_;
  int degree_cap_;

  mutable std::unique_ptr<std::mutex> chain_mutex_;
  mutable std::shared_ptr<const Chain> chain_;

  PermGroup(int degree, std::vector<Perm> gens, std::vector<int> forced_base,
            int degree_cap);
};

/// Spec-facing alias for the generator constructor.
PermGroup subgroup_generated(int degree, const std::vector<Perm>& gens);

/// Every conjugate of N's generators by G's generators lies in N.
bool is_normal(const PermGroup& G, const PermGroup& N);

/// All generators of `sub` are members of `big`.
bool is_subgroup_of(const PermGroup& sub, const PermGroup& big);

}  // namespace qk
