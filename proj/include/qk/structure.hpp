#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/bigint.hpp"
#include "qk/group.hpp"
#include "qk/partition.hpp"
#include "qk/perm_group.hpp"
#include "qk/quandle.hpp"

namespace qk {

struct InvarianceResult {
  bool invariant = true;
  // when false: row z maps x, y (same class) into different classes
  int z = -1, x = -1, y = -1;
};

/// Are the classes of alpha blocks of the left-multiplication action?
InvarianceResult is_invariant(const QuandleTable& Q, const Partition& alpha);

struct CongruenceResult {
  bool congruence = true;
  std::array<int, 4> witness{-1, -1, -1, -1};  // x, y, z, op (0 = *, 1 = \)
};

CongruenceResult is_congruence(const QuandleTable& Q, const Partition& alpha);

/// Smallest congruence identifying a and b (pair-propagation closure).
Partition principal_congruence(const QuandleTable& Q, int a, int b);

/// Only congruences are the identity and the full relation; decided by
/// sweeping principal congruences. Throws TooSmall for n < 2.
bool is_simple(const QuandleTable& Q);

/// The left multiplication group acts primitively (false for disconnected).
bool is_primitive_quandle(const QuandleTable& Q);

/// Dis_alpha: normal closure in LMlt of the translations along alpha-pairs.
PermGroup dis_alpha(const QuandleTable& Q, const Partition& alpha);

/// Dis^alpha inside Dis(Q): displacements moving every point within its
/// class. Throws NotInvariant when alpha is not invariant.
PermGroup dis_upper_alpha(const QuandleTable& Q, const Partition& alpha);

/// Kernel of LMlt(Q) -> LMlt(Q/alpha) (the same filter inside LMlt).
PermGroup lmlt_kernel(const QuandleTable& Q, const Partition& alpha);

/// O_N: orbit partition of a subgroup N <= LMlt(Q) (membership-checked).
Partition orbit_relation(const QuandleTable& Q, const PermGroup& N);

/// C^N as a relation: pairs (x, y) with L_x L_y^-1 in N. Kept as a pair
/// list; as_partition() refuses loudly if the relation is not transitive.
struct KernelRelation {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // x < y only
  bool is_equivalence = false;
  Partition as_partition() const;
};
KernelRelation kernel_relation(const QuandleTable& Q, const PermGroup& N);

struct AdmissibilityReport {
  bool normal_in_lmlt = false;
  bool orbit_leq_kernel = false;  // O_N <= C^N
  bool admissible = false;
  // rack cross-check: admissible should coincide with normality for racks
  std::optional<bool> rack_shortcut_agrees;
};

/// Requires N <= Dis(Q) (NotSubgroup otherwise).
AdmissibilityReport norm_membership(const QuandleTable& Q, const PermGroup& N);

/// All admissible subgroups when |Dis(Q)| <= cap: normal closures of
/// single displacements, closed under join. CapExceeded otherwise.
std::vector<PermGroup> norm_lattice_small(const QuandleTable& Q,
                                          std::size_t cap = kDefaultGroupCap);

/// sigma_N: equal point stabilizers inside N. Enumerates N (CapExceeded
/// past cap). For N normal in LMlt the result is asserted invariant.
Partition sigma_relation(const QuandleTable& Q, const PermGroup& N,
                         std::size_t cap = kDefaultGroupCap);

/// For a simple group L: a subgroup of L^t containing the diagonal is cut
/// out by an index partition. Returns that partition of {0..t-1} for
/// H = <diagonal, extra_gens>, or nullopt if the subgroup fails to have the
/// partition shape (which would contradict the theory - a bug alarm).
std::optional<Partition> diagonal_overgroup_shape(
    const ExplicitGroup& L, int t, const std::vector<std::vector<int>>& extra_gens,
    std::size_t cap = kDefaultGroupCap);

struct ConjectureVerdict {
  bool superconnected = false;
  bool simple = false;
  bool solvable_dis = false;
  bool abelian_dis = false;
  bool counterexample_i = false;   // superconnected but Dis not solvable
  bool counterexample_ii = false;  // simple superconnected but Dis not abelian
};

ConjectureVerdict conjecture_report(const QuandleTable& Q);

/// Everything the props/scan surface reports about one table.
struct QuandleClassReport {
  int n = 0;
  TableClass cls = TableClass::NotLeftQuasigroup;
  bool connected = false, faithful = false, latin = false;
  bool superfaithful = false, superconnected = false;
  bool simple = false, primitive = false;
  bool solvable_dis = false, abelian_dis = false;
  BigUInt lmlt_order, dis_order;
  std::vector<int> orbit_sizes;
  int cayley_classes = 0;  // |Q/lambda|
  // witnesses, present exactly for the false predicates
  std::vector<std::pair<std::string, std::string>> witnesses;
  ConjectureVerdict conjecture;
};

QuandleClassReport classify(const QuandleTable& Q);

}  // namespace qk
