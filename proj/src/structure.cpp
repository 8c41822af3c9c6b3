#include "qk/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qk/errors.hpp"

namespace qk {

InvarianceResult is_invariant(const QuandleTable& Q, const Partition& alpha) {
  if (alpha.size() != Q.n) throw Error("is_invariant: size mismatch");
  const std::vector<int> ids = alpha.class_ids();
  for (int z = 0; z < Q.n; ++z) {
    const auto& row = Q.mult[z];
    // every class must land inside a single class
    std::vector<int> image_class(alpha.class_count(), -1);
    std::vector<int> first_point(alpha.class_count(), -1);
    for (int x = 0; x < Q.n; ++x) {
      const int c = ids[x];
      const int img = ids[row[x]];
      if (image_class[c] < 0) {
        image_class[c] = img;
        first_point[c] = x;
      } else if (image_class[c] != img) {
        return {false, z, first_point[c], x};
      }
    }
  }
  return {};
}

CongruenceResult is_congruence(const QuandleTable& Q, const Partition& alpha) {
  if (const auto w = congruence_violation(Q, alpha)) return {false, *w};
  return {};
}

Partition principal_congruence(const QuandleTable& Q, int a, int b) {
  if (a < 0 || b < 0 || a >= Q.n || b >= Q.n)
    throw Error("principal_congruence: pair out of range");
  Partition p(Q.n);
  std::vector<std::pair<int, int>> queue;
  if (p.merge(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    const auto [x, y] = queue.back();
    queue.pop_back();
    for (int z = 0; z < Q.n; ++z) {
      const std::pair<int, int> candidates[4] = {
          {Q.mult[z][x], Q.mult[z][y]},
          {Q.ldiv[z][x], Q.ldiv[z][y]},
          {Q.mult[x][z], Q.mult[y][z]},
          {Q.ldiv[x][z], Q.ldiv[y][z]},
      };
      for (const auto& [u, v] : candidates)
        if (p.merge(u, v)) queue.emplace_back(u, v);
    }
  }
  return p;
}

bool is_simple(const QuandleTable& Q) {
  if (Q.n < 2) throw TooSmall("simplicity needs at least 2 elements");
  for (int a = 0; a < Q.n; ++a)
    for (int b = a + 1; b < Q.n; ++b)
      if (!principal_congruence(Q, a, b).is_single_class()) return false;
  return true;
}

bool is_primitive_quandle(const QuandleTable& Q) {
  if (!is_connected(Q)) return false;
  return lmlt(Q).is_primitive();
}

PermGroup dis_alpha(const QuandleTable& Q, const Partition& alpha) {
  if (alpha.size() != Q.n) throw Error("dis_alpha: size mismatch");
  const PermGroup L = lmlt(Q);
  std::vector<Perm> seeds;
  for (const auto& cls : alpha.classes()) {
    if (cls.size() < 2) continue;
    const Perm inv0 = Q.left_translation(cls[0]).inverse();
    for (std::size_t i = 1; i < cls.size(); ++i) {
      Perm d = Q.left_translation(cls[i]) * inv0;
      if (!d.is_identity()) seeds.push_back(std::move(d));
    }
  }
  return L.normal_closure(seeds);
}

PermGroup dis_upper_alpha(const QuandleTable& Q, const Partition& alpha) {
  const auto inv = is_invariant(Q, alpha);
  if (!inv.invariant)
    throw NotInvariant("dis_upper_alpha: classes are not blocks (row " +
                       std::to_string(inv.z) + ")");
  return dis(Q).kernel_of_action(alpha);
}

PermGroup lmlt_kernel(const QuandleTable& Q, const Partition& alpha) {
  const auto inv = is_invariant(Q, alpha);
  if (!inv.invariant)
    throw NotInvariant("lmlt_kernel: classes are not blocks (row " +
                       std::to_string(inv.z) + ")");
  return lmlt(Q).kernel_of_action(alpha);
}

Partition orbit_relation(const QuandleTable& Q, const PermGroup& N) {
  const PermGroup L = lmlt(Q);
  if (!is_subgroup_of(N, L))
    throw NotSubgroup("orbit_relation: N is not inside LMlt(Q)");
  return N.orbit_partition();
}

Partition KernelRelation::as_partition() const {
  if (!is_equivalence)
    throw Error("kernel relation is not an equivalence relation");
  Partition p(n);
  for (const auto& [x, y] : pairs) p.merge(x, y);
  return p;
}

KernelRelation kernel_relation(const QuandleTable& Q, const PermGroup& N) {
  const PermGroup L = lmlt(Q);
  if (!is_subgroup_of(N, L))
    throw NotSubgroup("kernel_relation: N is not inside LMlt(Q)");
  KernelRelation rel;
  rel.n = Q.n;
  std::vector<Perm> rows;
  rows.reserve(Q.n);
  for (int x = 0; x < Q.n; ++x) rows.push_back(Q.left_translation(x));
  Partition p(Q.n);
  for (int x = 0; x < Q.n; ++x)
    for (int y = x + 1; y < Q.n; ++y)
      if (N.contains(rows[x] * rows[y].inverse())) {
        rel.pairs.emplace_back(x, y);
        p.merge(x, y);
      }
  // transitivity: the union-find closure must not relate more pairs
  std::size_t closed_pairs = 0;
  for (const auto& cls : p.classes())
    closed_pairs += cls.size() * (cls.size() - 1) / 2;
  rel.is_equivalence = closed_pairs == rel.pairs.size();
  return rel;
}

AdmissibilityReport norm_membership(const QuandleTable& Q, const PermGroup& N) {
  const PermGroup L = lmlt(Q);
  const PermGroup D = dis(Q);
  if (!is_subgroup_of(N, D))
    throw NotSubgroup("norm_membership: N is not inside Dis(Q)");
  AdmissibilityReport r;
  r.normal_in_lmlt = is_normal(L, N);
  // O_N <= C^N: along each N-orbit it is enough to compare against the root
  r.orbit_leq_kernel = true;
  const Partition orb = N.orbit_partition();
  std::vector<Perm> rows;
  rows.reserve(Q.n);
  for (int x = 0; x < Q.n; ++x) rows.push_back(Q.left_translation(x));
  for (const auto& cls : orb.classes()) {
    for (std::size_t i = 1; i < cls.size() && r.orbit_leq_kernel; ++i)
      if (!N.contains(rows[cls[i]] * rows[cls[0]].inverse()))
        r.orbit_leq_kernel = false;
    if (!r.orbit_leq_kernel) break;
  }
  r.admissible = r.normal_in_lmlt && r.orbit_leq_kernel;
  const auto v = validate(Q);
  if (v.cls == TableClass::Rack || v.cls == TableClass::Quandle)
    r.rack_shortcut_agrees = (r.admissible == r.normal_in_lmlt);
  return r;
}

std::vector<PermGroup> norm_lattice_small(const QuandleTable& Q,
                                          std::size_t cap) {
  const PermGroup L = lmlt(Q);
  const PermGroup D = dis(Q);
  if (BigUInt{cap} < D.order())
    throw CapExceeded("norm_lattice_small: |Dis| exceeds cap");
  const std::vector<Perm> elems = D.elements(cap);

  std::vector<PermGroup> found{PermGroup::trivial(Q.n)};
  const auto known = [&](const PermGroup& candidate) {
    for (const PermGroup& g : found)
      if (g.order() == candidate.order() && is_subgroup_of(candidate, g))
        return true;
    return false;
  };
  // atoms: normal closures of single displacements
  for (const Perm& e : elems) {
    if (e.is_identity()) continue;
    PermGroup c = L.normal_closure({e});
    if (!is_subgroup_of(c, D))
      throw Error("norm_lattice_small: closure escapes Dis(Q)");
    if (!known(c)) found.push_back(std::move(c));
  }
  // join-close
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = found.size();
    for (std::size_t i = 1; i < count && !grew; ++i) {
      for (std::size_t j = i + 1; j < count && !grew; ++j) {
        std::vector<Perm> gens = found[i].generators();
        const auto& gj = found[j].generators();
        gens.insert(gens.end(), gj.begin(), gj.end());
        PermGroup join(Q.n, std::move(gens));
        if (!known(join)) {
          found.push_back(std::move(join));
          grew = true;
        }
      }
    }
  }
  // keep the admissible ones (for racks normality is already enough, but
  // the O_N <= C^N flag is evaluated regardless)
  std::vector<PermGroup> out;
  for (PermGroup& g : found) {
    const auto rep = norm_membership(Q, g);
    if (rep.admissible) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    return a.order() < b.order();
  });
  return out;
}

Partition sigma_relation(const QuandleTable& Q, const PermGroup& N,
                         std::size_t cap) {
  const PermGroup L = lmlt(Q);
  if (!is_subgroup_of(N, L))
    throw NotSubgroup("sigma_relation: N is not inside LMlt(Q)");
  const std::vector<Perm> elems = N.elements(cap);
  // stabilizer fingerprint per point
  std::map<std::vector<int>, int> first;
  Partition p(Q.n);
  for (int x = 0; x < Q.n; ++x) {
    std::vector<int> stab;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i][x] == x) stab.push_back(static_cast<int>(i));
    auto [it, inserted] = first.emplace(std::move(stab), x);
    if (!inserted) p.merge(it->second, x);
  }
  if (is_normal(L, N)) {
    const auto inv = is_invariant(Q, p);
    if (!inv.invariant)
      throw Error("sigma_relation: result not invariant for normal N (bug)");
  }
  return p;
}

std::optional<Partition> diagonal_overgroup_shape(
    const ExplicitGroup& L, int t, const std::vector<std::vector<int>>& extra_gens,
    std::size_t cap) {
  if (t < 1) throw Error("diagonal_overgroup_shape: t must be positive");
  std::uint64_t total = 1;
  for (int i = 0; i < t; ++i) {
    total *= L.n;
    if (total > cap)
      throw CapExceeded("diagonal_overgroup_shape: |L|^t exceeds cap");
  }
  // greedy small generating set for L
  std::vector<int> lgens;
  {
    SubgroupView cur = trivial_subgroup();
    for (int x = 1; x < L.n; ++x) {
      if (cur.contains(x)) continue;
      lgens.push_back(x);
      std::vector<int> seeds = lgens;
      cur = generated_subgroup(L, seeds);
      if (cur.order() == L.n) break;
    }
  }
  // closure of <diagonal, extras> inside L^t via mixed-radix codes
  const auto encode = [&](const std::vector<int>& tup) {
    std::uint64_t c = 0;
    for (int i = 0; i < t; ++i) c = c * L.n + tup[i];
    return c;
  };
  std::vector<std::vector<int>> gens;
  for (int g : lgens) gens.push_back(std::vector<int>(t, g));
  for (const auto& e : extra_gens) {
    if (static_cast<int>(e.size()) != t)
      throw Error("diagonal_overgroup_shape: extra generator arity");
    gens.push_back(e);
  }
  std::vector<char> in(total, 0);
  std::vector<std::vector<int>> list{std::vector<int>(t, 0)};
  in[0] = 1;
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (const auto& g : gens) {
      std::vector<int> p(t);
      for (int i = 0; i < t; ++i) p[i] = L.mul(list[k][i], g[i]);
      const std::uint64_t code = encode(p);
      if (!in[code]) {
        in[code] = 1;
        list.push_back(std::move(p));
      }
    }
  }
  // candidate index partition: i ~ j iff all members agree there
  Partition alpha(t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      bool equal = true;
      for (const auto& h : list)
        if (h[i] != h[j]) {
          equal = false;
          break;
        }
      if (equal) alpha.merge(i, j);
    }
  // the subgroup matches the alpha-diagonal exactly iff the sizes agree
  std::uint64_t expected = 1;
  for (int c = 0; c < alpha.class_count(); ++c) expected *= L.n;
  if (expected != list.size()) return std::nullopt;
  return alpha;
}

ConjectureVerdict conjecture_report(const QuandleTable& Q) {
  ConjectureVerdict v;
  v.superconnected = is_superconnected(Q).ok;
  v.simple = Q.n >= 2 && is_simple(Q);
  const PermGroup D = dis(Q);
  v.solvable_dis = D.is_solvable();
  v.abelian_dis = D.is_abelian();
  v.counterexample_i = v.superconnected && !v.solvable_dis;
  v.counterexample_ii = v.simple && v.superconnected && !v.abelian_dis;
  return v;
}

QuandleClassReport classify(const QuandleTable& Q) {
  QuandleClassReport r;
  r.n = Q.n;
  const auto val = validate(Q);
  r.cls = val.cls;
  if (!val.rows_bijective) return r;

  const auto push_witness = [&](const std::string& key, const std::string& val2) {
    r.witnesses.emplace_back(key, val2);
  };
  if (!val.idempotent)
    push_witness("idempotence", "x=" + std::to_string(val.idempotence_witness));
  if (!val.left_distributive)
    push_witness("left_distributivity",
                 "(x,y,z)=(" + std::to_string(val.distributivity_witness[0]) +
                     "," + std::to_string(val.distributivity_witness[1]) + "," +
                     std::to_string(val.distributivity_witness[2]) + ")");

  const Partition orb = orbits(Q);
  for (const auto& cls : orb.classes())
    r.orbit_sizes.push_back(static_cast<int>(cls.size()));
  r.connected = orb.is_single_class();
  if (!r.connected) push_witness("connected", "orbits " + orb.to_string());

  const Partition lambda = cayley_kernel(Q);
  r.cayley_classes = lambda.class_count();
  r.faithful = lambda.is_singletons();
  if (!r.faithful) push_witness("faithful", "lambda " + lambda.to_string());

  r.latin = is_latin(Q);
  if (!r.latin) push_witness("latin", "repeated column entry");

  const auto sf = is_superfaithful(Q);
  r.superfaithful = sf.ok;
  if (!sf.ok)
    push_witness("superfaithful", "(x,y)=(" + std::to_string(sf.x) + "," +
                                      std::to_string(sf.y) + ")");
  const auto sc = is_superconnected(Q);
  r.superconnected = sc.ok;
  if (!sc.ok)
    push_witness("superconnected", "(x,y)=(" + std::to_string(sc.x) + "," +
                                       std::to_string(sc.y) + ")");

  if (Q.n >= 2) {
    r.simple = is_simple(Q);
    if (!r.simple) {
      // exhibit one proper principal congruence
      for (int a = 0; a < Q.n && r.witnesses.size() < 64; ++a) {
        bool done = false;
        for (int b = a + 1; b < Q.n; ++b) {
          const Partition p = principal_congruence(Q, a, b);
          if (!p.is_single_class()) {
            push_witness("simple", "congruence " + p.to_string());
            done = true;
            break;
          }
        }
        if (done) break;
      }
    }
  } else {
    r.simple = false;
    push_witness("simple", "one-element quandle");
  }

  const PermGroup L = lmlt(Q);
  const PermGroup D = dis(Q);
  r.lmlt_order = L.order();
  r.dis_order = D.order();

  r.primitive = is_primitive_quandle(Q);
  if (!r.primitive) {
    if (!r.connected) {
      push_witness("primitive", "not connected");
    } else {
      for (int i = 1; i < Q.n; ++i) {
        const auto sys = L.minimal_block_system(0, i);
        if (sys.block_count != 1) {
          push_witness("primitive", "blocks " + sys.partition.to_string());
          break;
        }
      }
    }
  }

  r.solvable_dis = D.is_solvable();
  if (!r.solvable_dis) push_witness("solvable_dis", "derived series stabilizes");
  r.abelian_dis = D.is_abelian();
  if (!r.abelian_dis) push_witness("abelian_dis", "noncommuting displacements");

  r.conjecture.superconnected = r.superconnected;
  r.conjecture.simple = r.simple;
  r.conjecture.solvable_dis = r.solvable_dis;
  r.conjecture.abelian_dis = r.abelian_dis;
  r.conjecture.counterexample_i = r.superconnected && !r.solvable_dis;
  r.conjecture.counterexample_ii = r.simple && r.superconnected && !r.abelian_dis;
  return r;
}

}  // namespace qk
