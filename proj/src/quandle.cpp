#include "qk/quandle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <thread>
#include <unordered_map>

#include "qk/errors.hpp"

namespace qk {

QuandleTable make_left_quasigroup(std::vector<std::vector<int>> mult,
                                  std::vector<std::string> labels) {
  const int n = static_cast<int>(mult.size());
  if (n == 0) throw InvalidTable("empty table");
  QuandleTable Q;
  Q.n = n;
  Q.ldiv.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(mult[x].size()) != n)
      throw InvalidTable("row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < n; ++y) {
      const int v = mult[x][y];
      if (v < 0 || v >= n)
        throw InvalidTable("entry out of range at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
      if (Q.ldiv[x][v] != -1)
        throw InvalidTable("row " + std::to_string(x) +
                           " is not a bijection (repeated value " +
                           std::to_string(v) + ")");
      Q.ldiv[x][v] = y;
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InvalidTable("label count does not match size");
  Q.mult = std::move(mult);
  Q.labels = std::move(labels);
  return Q;
}

std::string to_string(TableClass c) {
  switch (c) {
    case TableClass::NotLeftQuasigroup: return "not-a-left-quasigroup";
    case TableClass::LeftQuasigroup: return "left-quasigroup";
    case TableClass::Rack: return "rack";
    case TableClass::Quandle: return "quandle";
  }
  return "?";
}

ValidationReport validate(const std::vector<std::vector<int>>& mult, int jobs) {
  ValidationReport r;
  const int n = static_cast<int>(mult.size());
  if (n == 0) return r;

  r.rows_bijective = true;
  for (int x = 0; x < n && r.rows_bijective; ++x) {
    if (static_cast<int>(mult[x].size()) != n) {
      r.rows_bijective = false;
      r.row_witness = {x, -1, -1};
      break;
    }
    std::vector<int> first(n, -1);
    for (int y = 0; y < n; ++y) {
      const int v = mult[x][y];
      if (v < 0 || v >= n) {
        r.rows_bijective = false;
        r.row_witness = {x, y, -1};
        break;
      }
      if (first[v] >= 0) {
        r.rows_bijective = false;
        r.row_witness = {x, first[v], y};
        break;
      }
      first[v] = y;
    }
  }
  if (!r.rows_bijective) {
    r.cls = TableClass::NotLeftQuasigroup;
    return r;
  }

  r.idempotent = true;
  for (int x = 0; x < n; ++x)
    if (mult[x][x] != x) {
      r.idempotent = false;
      r.idempotence_witness = x;
      break;
    }

  // distributivity scan, optionally chunked over rows
  r.left_distributive = true;
  const auto scan_rows = [&](int lo, int hi) -> std::array<int, 3> {
    for (int x = lo; x < hi; ++x) {
      const auto& rowx = mult[x];
      for (int y = 0; y < n; ++y) {
        const auto& rhs_row = mult[rowx[y]];
        const auto& rowy = mult[y];
        for (int z = 0; z < n; ++z) {
          if (rowx[rowy[z]] != rhs_row[rowx[z]]) return {x, y, z};
        }
      }
    }
    return {-1, -1, -1};
  };
  if (jobs <= 1 || n < 64) {
    const auto w = scan_rows(0, n);
    if (w[0] >= 0) {
      r.left_distributive = false;
      r.distributivity_witness = w;
    }
  } else {
    const int chunks = std::min(jobs, n);
    std::vector<std::array<int, 3>> results(chunks, {-1, -1, -1});
    std::vector<std::thread> threads;
    for (int c = 0; c < chunks; ++c) {
      const int lo = static_cast<int>(static_cast<long long>(n) * c / chunks);
      const int hi = static_cast<int>(static_cast<long long>(n) * (c + 1) / chunks);
      threads.emplace_back([&results, &scan_rows, c, lo, hi] {
        results[c] = scan_rows(lo, hi);
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& w : results)
      if (w[0] >= 0 && (r.left_distributive || w < r.distributivity_witness)) {
        r.left_distributive = false;
        r.distributivity_witness = w;
      }
  }

  if (!r.left_distributive)
    r.cls = TableClass::LeftQuasigroup;
  else
    r.cls = r.idempotent ? TableClass::Quandle : TableClass::Rack;
  return r;
}

ValidationReport validate(const QuandleTable& Q, int jobs) {
  return validate(Q.mult, jobs);
}

PermGroup lmlt(const QuandleTable& Q) {
  std::vector<Perm> gens;
  gens.reserve(Q.n);
  for (int x = 0; x < Q.n; ++x) gens.push_back(Q.left_translation(x));
  return PermGroup(Q.n, std::move(gens), std::max(Q.n, kDefaultDegreeCap));
}

PermGroup dis(const QuandleTable& Q) {
  const PermGroup L = lmlt(Q);
  const Perm inv0 = Q.left_translation(0).inverse();
  std::vector<Perm> seeds;
  for (int x = 1; x < Q.n; ++x) {
    Perm d = Q.left_translation(x) * inv0;
    if (!d.is_identity()) seeds.push_back(std::move(d));
  }
  return L.normal_closure(seeds);
}

Partition orbits(const QuandleTable& Q) {
  Partition p(Q.n);
  for (int x = 0; x < Q.n; ++x)
    for (int y = 0; y < Q.n; ++y) p.merge(y, Q.mult[x][y]);
  return p;
}

bool is_connected(const QuandleTable& Q) { return orbits(Q).is_single_class(); }

Partition cayley_kernel(const QuandleTable& Q) {
  Partition p(Q.n);
  std::map<std::vector<int>, int> first;
  for (int x = 0; x < Q.n; ++x) {
    auto [it, inserted] = first.emplace(Q.mult[x], x);
    if (!inserted) p.merge(it->second, x);
  }
  return p;
}

bool is_faithful(const QuandleTable& Q) {
  return cayley_kernel(Q).is_singletons();
}

std::vector<int> subquandle_closure(const QuandleTable& Q, std::vector<int> seeds) {
  if (seeds.empty()) throw Error("subquandle_closure: empty seed set");
  std::vector<char> in(Q.n, 0);
  std::sort(seeds.begin(), seeds.end());
  std::vector<int> list;
  for (int s : seeds) {
    if (s < 0 || s >= Q.n) throw Error("subquandle_closure: seed out of range");
    if (!in[s]) {
      in[s] = 1;
      list.push_back(s);
    }
  }
  // pair scan until stable; new elements join the worklist
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      for (int v : {Q.mult[list[i]][list[j]], Q.ldiv[list[i]][list[j]],
                    Q.mult[list[j]][list[i]], Q.ldiv[list[j]][list[i]]}) {
        if (!in[v]) {
          in[v] = 1;
          list.push_back(v);
        }
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

QuandleTable subquandle_table(const QuandleTable& Q, const std::vector<int>& elems) {
  std::vector<int> pos(Q.n, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int v = Q.mult[elems[i]][elems[j]];
      if (pos[v] < 0) throw Error("subquandle_table: set is not closed");
      t[i][j] = pos[v];
    }
  std::vector<std::string> labels;
  if (!Q.labels.empty()) {
    labels.resize(m);
    for (int i = 0; i < m; ++i) labels[i] = Q.labels[elems[i]];
  }
  return make_left_quasigroup(std::move(t), std::move(labels));
}

WitnessPair is_superfaithful(const QuandleTable& Q) {
  for (int x = 0; x < Q.n; ++x)
    for (int y = 0; y < Q.n; ++y)
      if (y != x && Q.mult[x][y] == y) return {false, x, y};
  return {};
}

namespace {

bool subset_is_connected(const QuandleTable& Q, const std::vector<int>& elems) {
  // orbit of elems[0] under the restricted left translations
  std::vector<int> pos(Q.n, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  std::vector<char> seen(elems.size(), 0);
  std::vector<int> queue{elems[0]};
  seen[0] = 1;
  std::size_t reached = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int a : elems) {
      for (int v : {Q.mult[a][queue[k]], Q.ldiv[a][queue[k]]}) {
        const int p = pos[v];
        if (!seen[p]) {
          seen[p] = 1;
          ++reached;
          queue.push_back(v);
        }
      }
    }
  }
  return reached == elems.size();
}

}  // namespace

WitnessPair is_superconnected(const QuandleTable& Q) {
  std::map<std::vector<int>, bool> verdicts;
  for (int x = 0; x < Q.n; ++x) {
    for (int y = x + 1; y < Q.n; ++y) {
      const std::vector<int> sub = subquandle_closure(Q, {x, y});
      auto it = verdicts.find(sub);
      if (it == verdicts.end())
        it = verdicts.emplace(sub, subset_is_connected(Q, sub)).first;
      if (!it->second) return {false, x, y};
    }
  }
  return {};
}

bool is_latin(const QuandleTable& Q) {
  for (int y = 0; y < Q.n; ++y) {
    std::vector<char> seen(Q.n, 0);
    for (int x = 0; x < Q.n; ++x) {
      const int v = Q.mult[x][y];
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

QuandleTable power_quandle(const QuandleTable& Q, int n) {
  std::vector<std::vector<int>> rows(Q.n, std::vector<int>(Q.n));
  for (int x = 0; x < Q.n; ++x) {
    // walk each cycle of L_x and shift by n inside it
    std::vector<char> done(Q.n, 0);
    for (int s = 0; s < Q.n; ++s) {
      if (done[s]) continue;
      std::vector<int> cyc;
      for (int j = s; !done[j]; j = Q.mult[x][j]) {
        done[j] = 1;
        cyc.push_back(j);
      }
      const int len = static_cast<int>(cyc.size());
      const int shift = ((n % len) + len) % len;
      for (int k = 0; k < len; ++k) rows[x][cyc[k]] = cyc[(k + shift) % len];
    }
  }
  return make_left_quasigroup(std::move(rows), Q.labels);
}

std::optional<std::array<int, 4>> congruence_violation(const QuandleTable& Q,
                                                       const Partition& alpha) {
  if (alpha.size() != Q.n) throw Error("congruence_violation: size mismatch");
  const auto classes = alpha.classes();
  for (const auto& cls : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        const int x = cls[i], y = cls[j];
        for (int z = 0; z < Q.n; ++z) {
          if (!alpha.same(Q.mult[x][z], Q.mult[y][z])) return {{x, y, z, 0}};
          if (!alpha.same(Q.mult[z][x], Q.mult[z][y])) return {{x, y, z, 0}};
          if (!alpha.same(Q.ldiv[x][z], Q.ldiv[y][z])) return {{x, y, z, 1}};
          if (!alpha.same(Q.ldiv[z][x], Q.ldiv[z][y])) return {{x, y, z, 1}};
        }
      }
    }
  }
  return std::nullopt;
}

QuotientResult quotient(const QuandleTable& Q, const Partition& alpha) {
  if (const auto w = congruence_violation(Q, alpha))
    throw NotACongruence("relation is not a congruence", *w);
  const std::vector<int> ids = alpha.class_ids();
  const auto classes = alpha.classes();
  const int m = static_cast<int>(classes.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[i][j] = ids[Q.mult[classes[i][0]][classes[j][0]]];
  QuotientResult out{make_left_quasigroup(std::move(t)), ids};
  return out;
}

// --- isomorphism search ------------------------------------------------------

namespace {

// cheap per-element invariant: orbit size, fixed points and cycle type of
// the left translation, idempotence flag
std::vector<std::vector<int>> element_profiles(const QuandleTable& Q) {
  const Partition orb = orbits(Q);
  std::vector<int> orbit_size(Q.n);
  {
    const auto classes = orb.classes();
    for (const auto& c : classes)
      for (int x : c) orbit_size[x] = static_cast<int>(c.size());
  }
  std::vector<std::vector<int>> profiles(Q.n);
  for (int x = 0; x < Q.n; ++x) {
    std::vector<char> done(Q.n, 0);
    std::vector<int> cycle_type;
    int fixed = 0;
    for (int s = 0; s < Q.n; ++s) {
      if (done[s]) continue;
      int len = 0;
      for (int j = s; !done[j]; j = Q.mult[x][j]) {
        done[j] = 1;
        ++len;
      }
      cycle_type.push_back(len);
      if (len == 1) ++fixed;
    }
    std::sort(cycle_type.begin(), cycle_type.end());
    std::vector<int> prof{orbit_size[x], fixed, Q.mult[x][x] == x ? 1 : 0};
    prof.insert(prof.end(), cycle_type.begin(), cycle_type.end());
    profiles[x] = std::move(prof);
  }
  return profiles;
}

// sequence of points whose closure is the whole carrier
std::vector<int> generating_sequence(const QuandleTable& Q) {
  std::vector<int> gens;
  std::vector<char> covered(Q.n, 0);
  while (true) {
    int next = -1;
    for (int x = 0; x < Q.n; ++x)
      if (!covered[x]) {
        next = x;
        break;
      }
    if (next < 0) break;
    gens.push_back(next);
    for (int v : subquandle_closure(Q, gens)) covered[v] = 1;
  }
  return gens;
}

// extend a map defined on the generating points to everything it forces;
// false on conflict or if the closure does not cover the carrier
bool propagate(const QuandleTable& A, const QuandleTable& B,
               std::vector<int>& img) {
  std::vector<int> defined;
  std::vector<char> used(B.n, 0);
  for (int x = 0; x < A.n; ++x)
    if (img[x] >= 0) {
      if (used[img[x]]) return false;
      used[img[x]] = 1;
      defined.push_back(x);
    }
  for (std::size_t i = 0; i < defined.size(); ++i) {
    for (std::size_t j = 0; j < defined.size(); ++j) {
      const int a = defined[i], b = defined[j];
      for (int op = 0; op < 2; ++op) {
        const int c = op ? A.ldiv[a][b] : A.mult[a][b];
        const int fc = op ? B.ldiv[img[a]][img[b]] : B.mult[img[a]][img[b]];
        if (img[c] < 0) {
          if (used[fc]) return false;
          img[c] = fc;
          used[fc] = 1;
          defined.push_back(c);
        } else if (img[c] != fc) {
          return false;
        }
      }
    }
  }
  return static_cast<int>(defined.size()) == A.n;
}

bool is_quandle_homomorphism(const QuandleTable& A, const QuandleTable& B,
                             const std::vector<int>& img) {
  for (int x = 0; x < A.n; ++x)
    for (int y = 0; y < A.n; ++y)
      if (img[A.mult[x][y]] != B.mult[img[x]][img[y]]) return false;
  return true;
}

bool iso_search(const QuandleTable& A, const QuandleTable& B,
                const std::vector<int>& gens, std::size_t k,
                const std::vector<std::vector<int>>& prof_a,
                const std::vector<std::vector<int>>& prof_b,
                std::vector<int>& chosen, std::vector<int>& out) {
  if (k == gens.size()) {
    std::vector<int> img(A.n, -1);
    for (std::size_t i = 0; i < gens.size(); ++i) img[gens[i]] = chosen[i];
    if (!propagate(A, B, img)) return false;
    if (!is_quandle_homomorphism(A, B, img)) return false;
    out = img;
    return true;
  }
  const int g = gens[k];
  for (int cand = 0; cand < B.n; ++cand) {
    if (prof_b[cand] != prof_a[g]) continue;
    bool taken = false;
    for (std::size_t i = 0; i < k; ++i)
      if (chosen[i] == cand) taken = true;
    if (taken) continue;
    chosen[k] = cand;
    if (iso_search(A, B, gens, k + 1, prof_a, prof_b, chosen, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const QuandleTable& a,
                                               const QuandleTable& b) {
  if (a.n != b.n) return std::nullopt;
  const auto prof_a = element_profiles(a);
  const auto prof_b = element_profiles(b);
  {
    auto sa = prof_a;
    auto sb = prof_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const std::vector<int> gens = generating_sequence(a);
  std::vector<int> chosen(gens.size(), -1);
  std::vector<int> out;
  if (iso_search(a, b, gens, 0, prof_a, prof_b, chosen, out)) return out;
  return std::nullopt;
}

// --- binary terms --------------------------------------------------------------

Term parse_term(const std::string& text) {
  Term t;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  std::function<int(bool)> parse_chain = [&](bool inside_parens) -> int {
    const std::function<int()> parse_atom = [&]() -> int {
      skip_ws();
      if (i >= text.size()) throw ParseError("term: unexpected end of input");
      const char c = text[i];
      if (c == 'x' || c == 'y') {
        ++i;
        t.nodes.push_back({c, -1, -1});
        return static_cast<int>(t.nodes.size()) - 1;
      }
      if (c == '(') {
        ++i;
        const int inner = parse_chain(true);
        skip_ws();
        if (i >= text.size() || text[i] != ')')
          throw ParseError("term: missing ')'");
        ++i;
        return inner;
      }
      throw ParseError(std::string("term: unexpected character '") + c + "'");
    };
    int lhs = parse_atom();
    while (true) {
      skip_ws();
      if (i >= text.size()) break;
      if (inside_parens && text[i] == ')') break;
      const char op = text[i];
      if (op != '*' && op != '\\')
        throw ParseError(std::string("term: unexpected '") + op + "'");
      ++i;
      const int rhs = parse_atom();
      t.nodes.push_back({op, lhs, rhs});
      lhs = static_cast<int>(t.nodes.size()) - 1;
    }
    return lhs;
  };
  t.root = parse_chain(false);
  return t;
}

int eval_term(const QuandleTable& Q, const Term& t, int x, int y) {
  if (t.root < 0) throw Error("eval_term: empty term");
  const std::function<int(int)> ev = [&](int node) -> int {
    const Term::Node& nd = t.nodes[node];
    switch (nd.kind) {
      case 'x': return x;
      case 'y': return y;
      case '*': return Q.mult[ev(nd.left)][ev(nd.right)];
      default: return Q.ldiv[ev(nd.left)][ev(nd.right)];
    }
  };
  return ev(t.root);
}

Partition term_count_relation(const QuandleTable& Q, const Term& s, const Term& t) {
  std::vector<int> p(Q.n, 0);
  for (int x = 0; x < Q.n; ++x)
    for (int y = 0; y < Q.n; ++y)
      if (eval_term(Q, s, x, y) == eval_term(Q, t, x, y)) ++p[x];
  Partition out(Q.n);
  std::map<int, int> first;
  for (int x = 0; x < Q.n; ++x) {
    auto [it, inserted] = first.emplace(p[x], x);
    if (!inserted) out.merge(it->second, x);
  }
  return out;
}

}  // namespace qk
