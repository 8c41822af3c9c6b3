#pragma once

#include <cstddef>
#include <vector>

#include "qk/group.hpp"

namespace qk {

inline constexpr std::size_t kDefaultStarCap = 200000;

enum class StarVerdict { Holds, Fails, Exceeded };

struct StarResult {
  StarVerdict verdict;
  int witness = -1;  // first y in x^G with no conjugating element in <x,y>
};

/// Does every conjugate y of x become conjugate to x already inside <x,y>?
/// `Exceeded` is reported when some <x,y> grows past `cap`, so theorem
/// sweeps can tell "refuted" from "not decided".
StarResult star_property(const ExplicitGroup& G, int x,
                         std::size_t cap = kDefaultStarCap);

/// Largest normal subgroup with order coprime to every prime in pi.
/// Computed as the join of the class normal closures of pi'-order.
SubgroupView o_pi_prime(const ExplicitGroup& G, const std::vector<int>& pi);

/// G = O_{pi'}(G) C_G(x), decided as orbit equality: the conjugation orbit
/// of x under O_{pi'}(G) must be the whole class x^G.
bool condition_opc(const ExplicitGroup& G, int x, const std::vector<int>& pi);

struct OpPrimeReport {
  bool cond_i;         // x^G meets C_G(x) only in x
  bool cond_ii_opc;    // G = O_{p'}(G) C_G(x)
  bool cond_iii_star;  // x^G has the star property
  bool consistent;     // all three agree (disagreement signals a bug)
};

/// Three independently computed predicates that are equivalent for
/// p-elements. Throws NotPElement when the order of x is not a power of p.
OpPrimeReport theorem_opprime_check(const ExplicitGroup& G, int x, int p);

/// For <x> a cyclic Sylow p-subgroup: true iff |O_{p'}(G)| * |<x>| = |G|.
/// Throws NotSylowCyclic when |x| is not the full p-part of |G|.
bool has_normal_p_complement_for_sylow(const ExplicitGroup& G, int x, int p);

/// The local sufficient condition over all g outside C_G(x): x and x^g are
/// conjugate by an element of O_{pi'}(<x, x^g>). Equivalent to
/// condition_opc for pi-elements, and it yields the star property with the
/// conjugator as witness.
bool pi_condition_ii(const ExplicitGroup& G, int x, const std::vector<int>& pi,
                     std::size_t cap = kDefaultGroupCap);

}  // namespace qk
