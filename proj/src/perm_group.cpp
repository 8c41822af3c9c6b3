#include "qk/perm_group.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "qk/errors.hpp"

namespace qk {

namespace {
constexpr std::size_t kKernelSubsetCap = 50000;
}

// ---------------------------------------------------------------------------
// Stabilizer chain
//
// Deterministic Schreier-Sims. Each level has a home generator list; the
// effective generating set of level l is the union of the home lists of
// levels >= l (a strong generator with home j fixes the first j base points,
// so it belongs to every stabilizer above its home). Base points are the
// smallest points moved by the offending residue, orbits are grown
// breadth-first with generators in list order, so two builds from the same
// generator list produce identical chains.
// ---------------------------------------------------------------------------

struct PermGroup::Chain {
  struct Level {
    int beta = -1;
    std::vector<Perm> gens;        // home generators of this level
    std::vector<Perm> eff;         // snapshot of the effective set at last orbit build
    std::vector<int> orbit;        // BFS order, orbit[0] == beta
    std::vector<int> pos;          // point -> position in orbit, or -1
    std::vector<Perm> transversal; // transversal[k] maps beta -> orbit[k]
    std::vector<int> via_point;    // Schreier tree parent point (-1 at root)
    std::vector<int> via_gen;      // index into eff for the tree edge
  };

  int degree = 0;
  std::vector<Level> levels;
  BigUInt order{1};
  std::vector<Perm> reduced;  // accepted input generators

  explicit Chain(int deg) : degree(deg) {}

  void add_level(int beta) {
    Level lv;
    lv.beta = beta;
    lv.pos.assign(degree, -1);
    lv.pos[beta] = 0;
    lv.orbit = {beta};
    lv.transversal = {Perm(degree)};
    lv.via_point = {-1};
    lv.via_gen = {-1};
    levels.push_back(std::move(lv));
  }

  std::vector<Perm> effective_gens(std::size_t li) const {
    std::vector<Perm> out;
    for (std::size_t m = li; m < levels.size(); ++m)
      out.insert(out.end(), levels[m].gens.begin(), levels[m].gens.end());
    return out;
  }

  void recompute_orbit(std::size_t li) {
    Level& lv = levels[li];
    lv.eff = effective_gens(li);
    lv.pos.assign(degree, -1);
    lv.pos[lv.beta] = 0;
    lv.orbit.assign(1, lv.beta);
    lv.transversal.assign(1, Perm(degree));
    lv.via_point.assign(1, -1);
    lv.via_gen.assign(1, -1);
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      const int p = lv.orbit[k];
      for (std::size_t gi = 0; gi < lv.eff.size(); ++gi) {
        const int q = lv.eff[gi][p];
        if (lv.pos[q] < 0) {
          lv.pos[q] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.transversal.push_back(lv.eff[gi] * lv.transversal[k]);
          lv.via_point.push_back(p);
          lv.via_gen.push_back(static_cast<int>(gi));
        }
      }
    }
  }

  // Strip p through levels starting at `from`. Returns the residue and the
  // level where stripping stopped (levels.size() if it passed everything).
  std::pair<Perm, int> strip(Perm p, int from) const {
    for (std::size_t l = from; l < levels.size(); ++l) {
      const Level& lv = levels[l];
      const int img = p[lv.beta];
      const int k = lv.pos[img];
      if (k < 0) return {std::move(p), static_cast<int>(l)};
      if (k != 0) p = lv.transversal[k].inverse() * p;
    }
    return {std::move(p), static_cast<int>(levels.size())};
  }

  bool contains(const Perm& p) const {
    return strip(p, 0).first.is_identity();
  }

  // Add a generator and push strip residues to their home levels without
  // running full verification. Orbits of touched levels are rebuilt; the
  // shallower ones are refreshed later by verify().
  void quick_extend(const Perm& g) {
    if (levels.empty()) add_level(g.smallest_moved());
    levels[0].gens.push_back(g);
    recompute_orbit(0);
    Perm r = g;
    int from = 0;
    while (true) {
      auto [res, j] = strip(std::move(r), from);
      if (res.is_identity()) break;
      if (j == static_cast<int>(levels.size())) add_level(res.smallest_moved());
      levels[j].gens.push_back(res);
      recompute_orbit(j);
      r = std::move(res);
      from = j;
    }
  }

  // Schreier-Sims verification: afterwards every Schreier generator of every
  // level strips to the identity through the levels below it, so the order
  // is the product of the fundamental orbit lengths and membership tests are
  // exact.
  void verify() {
    int i = static_cast<int>(levels.size()) - 1;
    while (i >= 0) {
      recompute_orbit(i);
      Level& lv = levels[i];
      bool complete = true;
      for (std::size_t oi = 0; oi < lv.orbit.size() && complete; ++oi) {
        for (std::size_t gi = 0; gi < lv.eff.size() && complete; ++gi) {
          const int p = lv.orbit[oi];
          const int q = lv.eff[gi][p];
          const int qpos = lv.pos[q];
          if (lv.via_point[qpos] == p && lv.via_gen[qpos] == static_cast<int>(gi))
            continue;  // tree edge, Schreier generator is trivial
          Perm schreier =
              lv.transversal[qpos].inverse() * (lv.eff[gi] * lv.transversal[oi]);
          if (schreier.is_identity()) continue;
          auto [res, j] = strip(std::move(schreier), i + 1);
          if (!res.is_identity()) {
            if (j == static_cast<int>(levels.size()))
              add_level(res.smallest_moved());
            levels[j].gens.push_back(res);
            i = j;
            complete = false;
          }
        }
      }
      if (complete) --i;
    }
    order = BigUInt{1};
    for (const Level& lv : levels) order *= lv.orbit.size();
  }
};

// ---------------------------------------------------------------------------
// PermGroup
// ---------------------------------------------------------------------------

PermGroup::PermGroup(int degree, std::vector<Perm> generators, int degree_cap)
    : PermGroup(degree, std::move(generators), {}, degree_cap) {}

PermGroup::PermGroup(int degree, std::vector<Perm> gens,
                     std::vector<int> forced_base, int degree_cap)
    : degree_(degree),
      forced_base_(std::move(forced_base)),
      degree_cap_(degree_cap),
      chain_mutex_(std::make_unique<std::mutex>()) {
  if (degree < 0) throw Error("negative degree");
  if (degree > degree_cap)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds cap " +
                      std::to_string(degree_cap));
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " +
                           std::to_string(degree));
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup::PermGroup(const PermGroup& o)
    : degree_(o.degree_),
      gens_(o.gens_),
      forced_base_(o.forced_base_),
      degree_cap_(o.degree_cap_),
      chain_mutex_(std::make_unique<std::mutex>()) {
  std::lock_guard<std::mutex> lock(*o.chain_mutex_);
  chain_ = o.chain_;
}

PermGroup& PermGroup::operator=(const PermGroup& o) {
  if (this == &o) return *this;
  degree_ = o.degree_;
  gens_ = o.gens_;
  forced_base_ = o.forced_base_;
  degree_cap_ = o.degree_cap_;
  chain_mutex_ = std::make_unique<std::mutex>();
  std::lock_guard<std::mutex> lock(*o.chain_mutex_);
  chain_ = o.chain_;
  return *this;
}

const PermGroup::Chain& PermGroup::ensure_chain() const {
  std::lock_guard<std::mutex> lock(*chain_mutex_);
  if (!chain_) {
    auto ch = std::make_shared<Chain>(degree_);
    for (int b : forced_base_) ch->add_level(b);
    for (const Perm& g : gens_) {
      if (ch->contains(g)) continue;  // conservative test; false negatives ok
      ch->reduced.push_back(g);
      ch->quick_extend(g);
    }
    ch->verify();
    chain_ = std::move(ch);
  }
  return *chain_;
}

const std::vector<Perm>& PermGroup::reduced_generators() const {
  return ensure_chain().reduced;
}

const BigUInt& PermGroup::order() const { return ensure_chain().order; }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatch("membership: degree mismatch");
  return ensure_chain().contains(p);
}

std::vector<int> PermGroup::base() const {
  const Chain& ch = ensure_chain();
  std::vector<int> b;
  b.reserve(ch.levels.size());
  for (const auto& lv : ch.levels) b.push_back(lv.beta);
  return b;
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) throw Error("orbit: point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<int> out{point};
  seen[point] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const Perm& g : gens_) {
      const int q = g[out[k]];
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition PermGroup::orbit_partition() const {
  Partition p(degree_);
  for (const Perm& g : gens_)
    for (int i = 0; i < degree_; ++i) p.merge(i, g[i]);
  return p;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit(0).size()) == degree_;
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& seeds) const {
  std::vector<Perm> ngens;
  for (const Perm& s : seeds) {
    if (s.degree() != degree_)
      throw DegreeMismatch("normal_closure: seed degree mismatch");
    if (!s.is_identity()) ngens.push_back(s);
  }
  const std::vector<Perm>& conjugators = reduced_generators();
  PermGroup N(degree_, ngens, degree_cap_);
  std::vector<Perm> queue = ngens;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const Perm& g : conjugators) {
      Perm c = conjugate(g, queue[qi]);
      if (!N.contains(c)) {
        ngens.push_back(c);
        queue.push_back(std::move(c));
        N = PermGroup(degree_, ngens, degree_cap_);
      }
    }
  }
  return N;
}

PermGroup PermGroup::derived_subgroup() const {
  const std::vector<Perm>& g = reduced_generators();
  std::vector<Perm> comms;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Perm c = commutator(g[i], g[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(comms);
}

std::vector<PermGroup> PermGroup::derived_series() const {
  std::vector<PermGroup> series;
  series.push_back(*this);
  while (true) {
    PermGroup next = series.back().derived_subgroup();
    if (next.order() == series.back().order()) break;  // stabilized
    const bool last = next.order().is_one();
    series.push_back(std::move(next));
    if (last) break;
  }
  return series;
}

bool PermGroup::is_solvable() const {
  return derived_series().back().order().is_one();
}

bool PermGroup::is_abelian() const {
  const std::vector<Perm>& g =
      gens_.size() > 16 ? reduced_generators() : gens_;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!commutator(g[i], g[j]).is_identity()) return false;
  return true;
}

PermGroup PermGroup::kernel_of_action(const Partition& partition) const {
  if (partition.size() != degree_)
    throw DegreeMismatch("kernel_of_action: partition size mismatch");
  const std::vector<Perm>& acting = reduced_generators();

  // Close the class collection under the action. For invariant partitions
  // nothing new appears; otherwise images of classes enter as extra
  // set-points so that stabilizing the original classes still puts exactly
  // the class-preserving elements in the kernel.
  std::vector<std::vector<int>> subsets = partition.classes();
  const int c = static_cast<int>(subsets.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < c; ++i) index[subsets[i]] = i;
  for (std::size_t si = 0; si < subsets.size(); ++si) {
    for (const Perm& g : acting) {
      std::vector<int> img;
      img.reserve(subsets[si].size());
      for (int x : subsets[si]) img.push_back(g[x]);
      std::sort(img.begin(), img.end());
      if (index.emplace(img, static_cast<int>(subsets.size())).second) {
        subsets.push_back(std::move(img));
        if (subsets.size() > kKernelSubsetCap)
          throw CapExceeded("kernel_of_action: class image collection exceeds cap");
      }
    }
  }

  const int ext_degree = degree_ + static_cast<int>(subsets.size());
  std::vector<Perm> ext_gens;
  ext_gens.reserve(acting.size());
  for (const Perm& g : acting) {
    std::vector<int> img(ext_degree);
    for (int i = 0; i < degree_; ++i) img[i] = g[i];
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      std::vector<int> sub;
      sub.reserve(subsets[s].size());
      for (int x : subsets[s]) sub.push_back(g[x]);
      std::sort(sub.begin(), sub.end());
      img[degree_ + s] = degree_ + index.at(sub);
    }
    ext_gens.emplace_back(std::move(img));
  }

  std::vector<int> forced(c);
  for (int i = 0; i < c; ++i) forced[i] = degree_ + i;
  PermGroup ext(ext_degree, std::move(ext_gens), std::move(forced), ext_degree);
  const Chain& ch = ext.ensure_chain();

  std::vector<Perm> kernel_gens;
  for (std::size_t l = c; l < ch.levels.size(); ++l) {
    for (const Perm& g : ch.levels[l].gens) {
      std::vector<int> img(degree_);
      for (int i = 0; i < degree_; ++i) img[i] = g[i];
      Perm r{std::move(img)};
      if (!r.is_identity()) kernel_gens.push_back(std::move(r));
    }
  }
  return PermGroup(degree_, std::move(kernel_gens), degree_cap_);
}

BlockSystem PermGroup::minimal_block_system(int a, int b) const {
  if (!is_transitive()) throw NotTransitive("minimal_block_system: group is not transitive");
  if (a < 0 || b < 0 || a >= degree_ || b >= degree_ || a == b)
    throw Error("minimal_block_system: bad seed pair");
  const std::vector<Perm>& g =
      gens_.size() > 48 ? reduced_generators() : gens_;

  Partition p(degree_);
  std::vector<std::pair<int, int>> queue;
  p.merge(a, b);
  queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const Perm& gen : g) {
      const int u = gen[x], v = gen[y];
      if (p.merge(u, v)) queue.emplace_back(u, v);
    }
  }
  const int classes = p.class_count();
  BlockSystem sys{std::move(p), classes, classes > 0 ? degree_ / classes : 0};
  return sys;
}

bool PermGroup::is_primitive() const {
  if (degree_ <= 1) return true;
  if (!is_transitive()) return false;
  for (int i = 1; i < degree_; ++i) {
    if (minimal_block_system(0, i).block_count != 1) return false;
  }
  return true;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (point < 0 || point >= degree_)
    throw Error("point_stabilizer: point out of range");
  PermGroup based(degree_, gens_, std::vector<int>{point}, degree_cap_);
  const Chain& ch = based.ensure_chain();
  std::vector<Perm> sgens;
  for (std::size_t l = 1; l < ch.levels.size(); ++l)
    sgens.insert(sgens.end(), ch.levels[l].gens.begin(), ch.levels[l].gens.end());
  return PermGroup(degree_, std::move(sgens), degree_cap_);
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  const Chain& ch = ensure_chain();
  if (BigUInt{cap} < ch.order)
    throw CapExceeded("elements: group order " + ch.order.to_string() +
                      " exceeds cap " + std::to_string(cap));
  std::vector<Perm> out;
  out.reserve(ch.order.fits_u64() ? ch.order.to_u64() : cap);
  // every element factors uniquely as u_0 u_1 ... over the chain levels
  std::vector<Perm> stack;
  const std::size_t nl = ch.levels.size();
  const auto rec = [&](auto&& self, std::size_t level, const Perm& prefix) -> void {
    if (level == nl) {
      out.push_back(prefix);
      return;
    }
    for (const Perm& t : ch.levels[level].transversal)
      self(self, level + 1, prefix * t);
  };
  rec(rec, 0, Perm(degree_));
  return out;
}

PermGroup subgroup_generated(int degree, const std::vector<Perm>& gens) {
  return PermGroup(degree, gens);
}

bool is_normal(const PermGroup& G, const PermGroup& N) {
  if (G.degree() != N.degree()) throw DegreeMismatch("is_normal: degree mismatch");
  for (const Perm& g : G.generators())
    for (const Perm& s : N.generators()) {
      if (!N.contains(conjugate(g, s))) return false;
      if (!N.contains(conjugate(g.inverse(), s))) return false;
    }
  return true;
}

bool is_subgroup_of(const PermGroup& sub, const PermGroup& big) {
  if (sub.degree() != big.degree())
    throw DegreeMismatch("is_subgroup_of: degree mismatch");
  for (const Perm& g : sub.generators())
    if (!big.contains(g)) return false;
  return true;
}

}  // namespace qk
