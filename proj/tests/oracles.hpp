#pragma once

// Test-only exhaustive twins for the group machinery. Everything here is
// plain closure into a hash set or a brute-force filter, kept independent of
// the BSGS/propagation code paths it checks.

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "qk/group.hpp"
#include "qk/partition.hpp"
#include "qk/perm.hpp"

namespace oracle {

/// Plain closure of permutation generators into a set (max_size guards
/// against runaway tests, it is not a correctness cap).
inline std::vector<qk::Perm> closure(int degree,
                                     const std::vector<qk::Perm>& gens,
                                     std::size_t max_size = 200000) {
  std::vector<qk::Perm> elems{qk::Perm(degree)};
  std::unordered_set<qk::Perm, qk::PermHash> seen(elems.begin(), elems.end());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const qk::Perm& g : gens) {
      qk::Perm p = elems[k] * g;
      if (seen.insert(p).second) {
        elems.push_back(std::move(p));
        if (elems.size() > max_size) throw std::runtime_error("oracle closure blew up");
      }
    }
  }
  return elems;
}

/// All set partitions of {0..n-1} as restricted-growth strings; n <= 10.
inline std::vector<qk::Partition> all_partitions(int n) {
  std::vector<qk::Partition> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    qk::Partition p(n);
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (rgs[i] == rgs[j]) p.merge(j, i);
    out.push_back(std::move(p));
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) {
        ++rgs[i];
        break;
      }
      // reset handled below
    }
    if (i == 0) break;
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

/// Brute-force conjugacy classes by scanning all (g, x) pairs.
inline std::vector<std::vector<int>> conj_classes(const qk::ExplicitGroup& G) {
  std::vector<std::vector<int>> out;
  std::vector<char> done(G.n, 0);
  for (int x = 0; x < G.n; ++x) {
    if (done[x]) continue;
    std::set<int> cls;
    for (int g = 0; g < G.n; ++g) cls.insert(G.conj(g, x));
    out.emplace_back(cls.begin(), cls.end());
    for (int m : out.back()) done[m] = 1;
  }
  return out;
}

/// Is the sorted element set a subgroup?
inline bool is_subgroup_set(const qk::ExplicitGroup& G, const std::vector<int>& s) {
  if (!std::binary_search(s.begin(), s.end(), 0)) return false;
  for (int a : s)
    for (int b : s)
      if (!std::binary_search(s.begin(), s.end(), G.mul(a, b))) return false;
  return true;
}

inline bool is_normal_set(const qk::ExplicitGroup& G, const std::vector<int>& s) {
  for (int g = 0; g < G.n; ++g)
    for (int a : s)
      if (!std::binary_search(s.begin(), s.end(), G.conj(g, a))) return false;
  return true;
}

/// All normal subgroups, as unions of conjugacy classes that form subgroups.
/// Exponential in the class count; keep fixtures small or use the cyclic
/// closed form instead.
inline std::vector<std::vector<int>> normal_subgroups(const qk::ExplicitGroup& G) {
  const auto classes = conj_classes(G);
  const int c = static_cast<int>(classes.size());
  if (c > 20) throw std::runtime_error("oracle normal_subgroups: too many classes");
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (1ull << c); ++mask) {
    std::vector<int> u;
    bool has_id = false;
    for (int i = 0; i < c; ++i) {
      if (mask & (1ull << i)) {
        u.insert(u.end(), classes[i].begin(), classes[i].end());
        if (std::find(classes[i].begin(), classes[i].end(), 0) != classes[i].end())
          has_id = true;
      }
    }
    if (!has_id) continue;
    std::sort(u.begin(), u.end());
    if (is_subgroup_set(G, u)) out.push_back(std::move(u));
  }
  return out;
}

}  // namespace oracle
