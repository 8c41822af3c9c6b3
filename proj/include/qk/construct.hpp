#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qk/group.hpp"
#include "qk/quandle.hpp"

namespace qk {

/// Conjugation quandle on a subset closed under conjugation: x*y = x y x^-1.
/// Indices follow the sorted element set; labels come from the group.
QuandleTable conj_quandle(const ExplicitGroup& G, const std::vector<int>& set);

/// Coset quandle on G/H with xH * yH = x theta(x^-1 y) H. Requires
/// H <= Fix(theta) (SubgroupNotFixed otherwise). Representatives are the
/// least element of each coset; well-definedness is asserted on all pairs
/// for small groups.
struct CosetQuandle {
  QuandleTable table;
  std::vector<int> reps;  // coset index -> least representative in G
};
CosetQuandle coset_quandle(const ExplicitGroup& G, const SubgroupView& H,
                           const GroupAutomorphism& theta);

/// Affine quandle on an abelian group: x*y = x - f(x) + f(y).
QuandleTable affine_quandle(const ExplicitGroup& A, const GroupAutomorphism& f);

/// Direct power G^t as an explicit table (mixed-radix indexing, first
/// coordinate most significant). CapExceeded when |G|^t > cap.
ExplicitGroup direct_power(const ExplicitGroup& G, int t, std::size_t cap);

/// The twist (x_1, ..., x_t) -> (theta(x_t), x_1, ..., x_{t-1}) on a
/// materialized direct power.
GroupAutomorphism shift_automorphism(const ExplicitGroup& G,
                                     const GroupAutomorphism& theta, int t,
                                     std::size_t cap = kDefaultTableCap);

/// Coset quandle of G^t over the diagonal copy of Fix(theta) under the
/// shift-and-twist automorphism. Tuples are handled as mixed-radix codes;
/// G^t is never materialized as a table.
struct TensorQuandle {
  QuandleTable table;
  int t = 1;
  std::vector<std::vector<int>> reps;  // coset index -> canonical tuple
};
TensorQuandle tensor_quandle(const ExplicitGroup& G, int t,
                             const GroupAutomorphism& theta,
                             std::size_t size_cap = kDefaultQuandleCap);

/// G x| <theta> together with the conjugacy class of (1, theta); the class
/// is checked against { (g theta(g)^-1, theta) : g in G }.
std::pair<ExplicitGroup, ConjClass> class_of_theta(const ExplicitGroup& G,
                                                   const GroupAutomorphism& theta,
                                                   std::size_t cap = kDefaultTableCap);

/// Generators of L^t x| Z_t acting on t disjoint copies of L's domain:
/// each L-generator acts on copy 0, plus the copy-shift. The permutation
/// companion for tensor quandles whose table is out of reach.
std::vector<Perm> shift_wreath_generators(const std::vector<Perm>& L_gens,
                                          int degree, int t);

}  // namespace qk
