#include "qk/group.hpp"

#include <algorithm>
#include <unordered_map>

#include "qk/errors.hpp"

namespace qk {

namespace {

// splitmix64, used for the deterministic associativity sample
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void check_associativity(const std::vector<std::vector<int>>& t, bool strict) {
  const int n = static_cast<int>(t.size());
  if (n <= 512 || strict) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]])
            throw InvalidTable("associativity fails at (" + std::to_string(a) +
                               "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
  } else {
    std::uint64_t state = 0x5eedu;
    for (int k = 0; k < 10000; ++k) {
      const int a = static_cast<int>(splitmix64(state) % n);
      const int b = static_cast<int>(splitmix64(state) % n);
      const int c = static_cast<int>(splitmix64(state) % n);
      if (t[t[a][b]][c] != t[a][t[b][c]])
        throw InvalidTable("associativity fails at (" + std::to_string(a) +
                           "," + std::to_string(b) + "," + std::to_string(c) +
                           ")");
    }
  }
}

}  // namespace

ExplicitGroup make_group(std::vector<std::vector<int>> table,
                         std::vector<std::string> labels, bool strict) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidTable("empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidTable("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw InvalidTable("table entry out of range");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InvalidTable("label count does not match order");

  // locate the identity
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      if (table[a][b] != b || table[b][a] != b) ok = false;
    if (ok) e = a;
  }
  if (e < 0) throw InvalidTable("no identity element");

  // normalize identity to index 0 by swapping labels 0 <-> e
  if (e != 0) {
    const auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<std::vector<int>> nt(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        nt[relabel(a)][relabel(b)] = relabel(table[a][b]);
    table = std::move(nt);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  // rows and columns must be permutations
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen_row[table[a][b]])
        throw InvalidTable("row " + std::to_string(a) + " repeats an entry");
      seen_row[table[a][b]] = 1;
      if (seen_col[table[b][a]])
        throw InvalidTable("column " + std::to_string(a) + " repeats an entry");
      seen_col[table[b][a]] = 1;
    }
  }

  check_associativity(table, strict);

  ExplicitGroup G;
  G.n = n;
  G.table = std::move(table);
  G.labels = std::move(labels);
  G.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (G.table[a][b] == 0) {
        G.inverse[a] = b;
        break;
      }
    if (G.inverse[a] < 0 || G.table[G.inverse[a]][a] != 0)
      throw InvalidTable("element " + std::to_string(a) + " has no inverse");
  }
  return G;
}

ExplicitGroup cyclic_group(int n) {
  if (n <= 0) throw Error("cyclic_group: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return make_group(std::move(t));
}

ExplicitGroup direct_product(const ExplicitGroup& a, const ExplicitGroup& b) {
  const int n = a.n * b.n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  const auto idx = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<std::string> labels(n);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < b.n; ++y)
      labels[idx(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
  return make_group(std::move(t), std::move(labels));
}

ExplicitGroup group_from_permutations(int degree, const std::vector<Perm>& gens,
                                      std::size_t cap,
                                      std::vector<Perm>* elements_out) {
  std::vector<Perm> elems{Perm(degree)};
  std::unordered_map<Perm, int, PermHash> index;
  index.emplace(elems[0], 0);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const Perm& g : gens) {
      if (g.degree() != degree)
        throw DegreeMismatch("group_from_permutations: generator degree");
      Perm p = elems[k] * g;
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(p));
        if (elems.size() > cap)
          throw CapExceeded("permutation group closure exceeds cap " +
                            std::to_string(cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index.at(elems[a] * elems[b]);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = elems[a].cycles();
  if (elements_out) *elements_out = elems;
  // closure of valid permutations: skip the triple re-check
  ExplicitGroup G;
  G.n = n;
  G.table = std::move(t);
  G.labels = std::move(labels);
  G.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) G.inverse[a] = index.at(elems[a].inverse());
  return G;
}

GroupAutomorphism identity_automorphism(const ExplicitGroup& G) {
  GroupAutomorphism t;
  t.images.resize(G.n);
  for (int i = 0; i < G.n; ++i) t.images[i] = i;
  return t;
}

GroupAutomorphism inner_automorphism(const ExplicitGroup& G, int g) {
  if (g < 0 || g >= G.n) throw Error("inner_automorphism: element out of range");
  GroupAutomorphism t;
  t.images.resize(G.n);
  for (int x = 0; x < G.n; ++x) t.images[x] = G.conj(g, x);
  t.inner_witness = g;
  return t;
}

GroupAutomorphism automorphism_from_images(const ExplicitGroup& G,
                                           std::vector<int> images) {
  if (static_cast<int>(images.size()) != G.n)
    throw NotAutomorphism("image array size does not match group order");
  std::vector<char> seen(G.n, 0);
  for (int v : images) {
    if (v < 0 || v >= G.n || seen[v])
      throw NotAutomorphism("image array is not a bijection");
    seen[v] = 1;
  }
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      if (images[G.mul(a, b)] != G.mul(images[a], images[b]))
        throw NotAutomorphism("homomorphism law fails at (" +
                              std::to_string(a) + "," + std::to_string(b) + ")");
  GroupAutomorphism t;
  t.images = std::move(images);
  return t;
}

int automorphism_order(const GroupAutomorphism& theta) {
  const int n = static_cast<int>(theta.images.size());
  std::vector<int> cur(theta.images);
  int ord = 1;
  const auto is_id = [&] {
    for (int i = 0; i < n; ++i)
      if (cur[i] != i) return false;
    return true;
  };
  while (!is_id()) {
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) next[i] = theta.images[cur[i]];
    cur = std::move(next);
    ++ord;
    if (ord > 1 << 24) throw Error("automorphism order runaway");
  }
  return ord;
}

GroupAutomorphism compose(const ExplicitGroup& G, const GroupAutomorphism& a,
                          const GroupAutomorphism& b) {
  GroupAutomorphism t;
  t.images.resize(G.n);
  for (int i = 0; i < G.n; ++i) t.images[i] = a.images[b.images[i]];
  return t;
}

std::vector<int> fixed_elements(const GroupAutomorphism& theta) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(theta.images.size()); ++i)
    if (theta.images[i] == i) out.push_back(i);
  return out;
}

std::vector<ConjClass> conjugacy_classes(const ExplicitGroup& G) {
  std::vector<ConjClass> out;
  std::vector<char> done(G.n, 0);
  for (int x = 0; x < G.n; ++x) {
    if (done[x]) continue;
    ConjClass cls = conjugacy_class_of(G, x);
    for (int m : cls.members) done[m] = 1;
    out.push_back(std::move(cls));
  }
  return out;
}

ConjClass conjugacy_class_of(const ExplicitGroup& G, int x) {
  std::vector<char> in(G.n, 0);
  for (int g = 0; g < G.n; ++g) in[G.conj(g, x)] = 1;
  ConjClass cls;
  for (int y = 0; y < G.n; ++y)
    if (in[y]) cls.members.push_back(y);
  cls.representative = cls.members.front();
  return cls;
}

bool SubgroupView::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

SubgroupView whole_group(const ExplicitGroup& G) {
  SubgroupView v;
  v.elements.resize(G.n);
  for (int i = 0; i < G.n; ++i) v.elements[i] = i;
  return v;
}

SubgroupView trivial_subgroup() { return SubgroupView{{0}}; }

SubgroupView centralizer(const ExplicitGroup& G, int x) {
  SubgroupView v;
  for (int g = 0; g < G.n; ++g)
    if (G.mul(g, x) == G.mul(x, g)) v.elements.push_back(g);
  return v;
}

SubgroupView normalizer_of_cyclic(const ExplicitGroup& G, int x) {
  // conjugation by g is an automorphism, so g<x>g^-1 = <gxg^-1>; equality
  // with <x> reduces to gxg^-1 being a power of x
  std::vector<char> in_cyc(G.n, 0);
  int p = 0;
  do {
    in_cyc[p] = 1;
    p = G.mul(p, x);
  } while (p != 0);
  SubgroupView v;
  for (int g = 0; g < G.n; ++g)
    if (in_cyc[G.conj(g, x)]) v.elements.push_back(g);
  return v;
}

SubgroupView generated_subgroup(const ExplicitGroup& G,
                                const std::vector<int>& seeds) {
  if (seeds.empty()) throw Error("generated_subgroup: empty seed set");
  std::vector<char> in(G.n, 0);
  std::vector<int> queue{0};
  in[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int s : seeds) {
      if (s < 0 || s >= G.n) throw Error("generated_subgroup: seed out of range");
      const int p = G.mul(queue[k], s);
      if (!in[p]) {
        in[p] = 1;
        queue.push_back(p);
      }
    }
  }
  SubgroupView v;
  for (int g = 0; g < G.n; ++g)
    if (in[g]) v.elements.push_back(g);
  return v;
}

bool is_normal_subgroup(const ExplicitGroup& G, const SubgroupView& H) {
  for (int g = 0; g < G.n; ++g)
    for (int h : H.elements)
      if (!H.contains(G.conj(g, h))) return false;
  return true;
}

ExplicitGroup subgroup_as_group(const ExplicitGroup& G, const SubgroupView& H) {
  const int m = H.order();
  std::vector<int> pos(G.n, -1);
  for (int i = 0; i < m; ++i) pos[H.elements[i]] = i;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int p = G.mul(H.elements[a], H.elements[b]);
      if (pos[p] < 0) throw Error("subgroup_as_group: set is not closed");
      t[a][b] = pos[p];
    }
  ExplicitGroup S;
  S.n = m;
  S.table = std::move(t);
  S.inverse.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    const int ia = G.inv(H.elements[a]);
    if (pos[ia] < 0) throw Error("subgroup_as_group: set not closed under inverse");
    S.inverse[a] = pos[ia];
  }
  if (!G.labels.empty()) {
    S.labels.resize(m);
    for (int a = 0; a < m; ++a) S.labels[a] = G.labels[H.elements[a]];
  }
  return S;
}

ExplicitGroup semidirect_with_automorphism(const ExplicitGroup& G,
                                           const GroupAutomorphism& theta) {
  const int m = automorphism_order(theta);
  const int n = G.n;
  const int N = n * m;
  // theta powers
  std::vector<std::vector<int>> pow(m);
  pow[0].resize(n);
  for (int i = 0; i < n; ++i) pow[0][i] = i;
  for (int k = 1; k < m; ++k) {
    pow[k].resize(n);
    for (int i = 0; i < n; ++i) pow[k][i] = theta.images[pow[k - 1][i]];
  }
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (int k = 0; k < m; ++k)
    for (int g = 0; g < n; ++g)
      for (int l = 0; l < m; ++l)
        for (int h = 0; h < n; ++h)
          t[k * n + g][l * n + h] = ((k + l) % m) * n + G.mul(g, pow[k][h]);
  std::vector<std::string> labels(N);
  for (int k = 0; k < m; ++k)
    for (int g = 0; g < n; ++g)
      labels[k * n + g] = "(" + G.label(g) + ",t^" + std::to_string(k) + ")";
  ExplicitGroup S;
  S.n = N;
  S.table = std::move(t);
  S.labels = std::move(labels);
  S.inverse.assign(N, -1);
  for (int k = 0; k < m; ++k)
    for (int g = 0; g < n; ++g) {
      // (g, t^k)^-1 = (theta^{-k}(g^-1), t^{-k})
      const int mk = (m - k) % m;
      S.inverse[k * n + g] = mk * n + pow[mk][G.inv(g)];
    }
  // paranoia: inverse correctness
  for (int a = 0; a < N; ++a)
    if (S.table[a][S.inverse[a]] != 0)
      throw Error("semidirect product: inverse construction failed");
  return S;
}

int element_order(const ExplicitGroup& G, int x) {
  int p = x, ord = 1;
  while (p != 0) {
    p = G.mul(p, x);
    ++ord;
  }
  return ord;
}

std::vector<int> prime_support(std::uint64_t n) {
  std::vector<int> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (int p : prime_support(n)) r *= static_cast<std::uint64_t>(p);
  return r;
}

std::uint64_t p_part(std::uint64_t n, int p) {
  if (p < 2) throw Error("p_part: p must be at least 2");
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_pi_element(const ExplicitGroup& G, int x, const std::vector<int>& pi) {
  const int ord = element_order(G, x);
  for (int p : prime_support(ord))
    if (std::find(pi.begin(), pi.end(), p) == pi.end()) return false;
  return true;
}

}  // namespace qk
