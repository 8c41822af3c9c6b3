#include "qk/construct.hpp"

#include <algorithm>
#include <unordered_map>

#include "qk/errors.hpp"

namespace qk {

QuandleTable conj_quandle(const ExplicitGroup& G, const std::vector<int>& set) {
  std::vector<int> elems(set);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) throw Error("conj_quandle: empty set");
  std::vector<int> pos(G.n, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 0 || elems[i] >= G.n)
      throw Error("conj_quandle: element out of range");
    pos[elems[i]] = static_cast<int>(i);
  }
  for (int x : elems)
    for (int g = 0; g < G.n; ++g)
      if (pos[G.conj(g, x)] < 0)
        throw NotClosedUnderConjugation(
            "conjugate of " + G.label(x) + " by " + G.label(g) +
            " leaves the set");
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = pos[G.conj(elems[i], elems[j])];
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = G.label(elems[i]);
  return make_left_quasigroup(std::move(t), std::move(labels));
}

CosetQuandle coset_quandle(const ExplicitGroup& G, const SubgroupView& H,
                           const GroupAutomorphism& theta) {
  if (static_cast<int>(theta.images.size()) != G.n)
    throw NotAutomorphism("coset_quandle: automorphism size mismatch");
  // H must be a subgroup of Fix(theta)
  for (int h : H.elements) {
    if (theta.images[h] != h)
      throw SubgroupNotFixed("subgroup element " + G.label(h) +
                             " is not fixed by theta");
  }
  if (H.elements.empty() || H.elements[0] != 0)
    throw Error("coset_quandle: subgroup must contain the identity");
  for (int a : H.elements)
    for (int b : H.elements)
      if (!H.contains(G.mul(a, b)))
        throw Error("coset_quandle: H is not closed under the product");

  // left cosets, least element as representative
  std::vector<int> coset_of(G.n, -1);
  std::vector<int> reps;
  for (int g = 0; g < G.n; ++g) {
    if (coset_of[g] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : H.elements) coset_of[G.mul(g, h)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    const int x = reps[i];
    const int xinv = G.inv(x);
    for (int j = 0; j < m; ++j) {
      const int y = reps[j];
      t[i][j] = coset_of[G.mul(x, theta.images[G.mul(xinv, y)])];
    }
  }
  // well-definedness on all representative choices (feasible sizes only)
  if (G.n <= 2048) {
    for (int a = 0; a < G.n; ++a) {
      const int ainv = G.inv(a);
      for (int b = 0; b < G.n; ++b) {
        if (coset_of[G.mul(a, theta.images[G.mul(ainv, b)])] !=
            t[coset_of[a]][coset_of[b]])
          throw Error("coset_quandle: operation not well-defined (H too big?)");
      }
    }
  }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = G.label(reps[i]) + "H";
  CosetQuandle out;
  out.table = make_left_quasigroup(std::move(t), std::move(labels));
  out.reps = std::move(reps);
  return out;
}

QuandleTable affine_quandle(const ExplicitGroup& A, const GroupAutomorphism& f) {
  for (int a = 0; a < A.n; ++a)
    for (int b = a + 1; b < A.n; ++b)
      if (A.mul(a, b) != A.mul(b, a))
        throw NotAbelian("affine_quandle: group is not abelian");
  // validates the homomorphism law
  const GroupAutomorphism fv = automorphism_from_images(A, f.images);
  std::vector<std::vector<int>> t(A.n, std::vector<int>(A.n));
  for (int x = 0; x < A.n; ++x) {
    const int xmfx = A.mul(x, A.inv(fv.images[x]));  // x - f(x)
    for (int y = 0; y < A.n; ++y) t[x][y] = A.mul(xmfx, fv.images[y]);
  }
  std::vector<std::string> labels;
  if (!A.labels.empty()) labels = A.labels;
  return make_left_quasigroup(std::move(t), std::move(labels));
}

namespace {

// mixed-radix codes for tuples over |G|, first coordinate most significant
struct TupleCodec {
  int n;  // group order
  int t;
  std::uint64_t total;

  std::vector<int> decode(std::uint64_t code) const {
    std::vector<int> tup(t);
    for (int i = t - 1; i >= 0; --i) {
      tup[i] = static_cast<int>(code % n);
      code /= n;
    }
    return tup;
  }
  std::uint64_t encode(const std::vector<int>& tup) const {
    std::uint64_t code = 0;
    for (int i = 0; i < t; ++i) code = code * n + tup[i];
    return code;
  }
};

}  // namespace

ExplicitGroup direct_power(const ExplicitGroup& G, int t, std::size_t cap) {
  if (t < 1) throw Error("direct_power: t must be positive");
  std::uint64_t total = 1;
  for (int i = 0; i < t; ++i) {
    total *= G.n;
    if (total > cap) throw CapExceeded("direct_power: |G|^t exceeds cap");
  }
  const TupleCodec codec{G.n, t, total};
  const int N = static_cast<int>(total);
  std::vector<std::vector<int>> table(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a) {
    const auto ta = codec.decode(a);
    for (int b = 0; b < N; ++b) {
      auto tb = codec.decode(b);
      for (int i = 0; i < t; ++i) tb[i] = G.mul(ta[i], tb[i]);
      table[a][b] = static_cast<int>(codec.encode(tb));
    }
  }
  std::vector<std::string> labels(N);
  for (int a = 0; a < N; ++a) {
    const auto ta = codec.decode(a);
    std::string l = "(";
    for (int i = 0; i < t; ++i) {
      if (i) l += ",";
      l += G.label(ta[i]);
    }
    labels[a] = l + ")";
  }
  ExplicitGroup P;
  P.n = N;
  P.table = std::move(table);
  P.labels = std::move(labels);
  P.inverse.assign(N, -1);
  for (int a = 0; a < N; ++a) {
    auto ta = codec.decode(a);
    for (int i = 0; i < t; ++i) ta[i] = G.inv(ta[i]);
    P.inverse[a] = static_cast<int>(codec.encode(ta));
  }
  return P;
}

GroupAutomorphism shift_automorphism(const ExplicitGroup& G,
                                     const GroupAutomorphism& theta, int t,
                                     std::size_t cap) {
  if (t < 1) throw Error("shift_automorphism: t must be positive");
  std::uint64_t total = 1;
  for (int i = 0; i < t; ++i) {
    total *= G.n;
    if (total > cap) throw CapExceeded("shift_automorphism: |G|^t exceeds cap");
  }
  const TupleCodec codec{G.n, t, total};
  GroupAutomorphism out;
  out.images.resize(static_cast<std::size_t>(total));
  for (std::uint64_t a = 0; a < total; ++a) {
    const auto ta = codec.decode(a);
    std::vector<int> img(t);
    img[0] = theta.images[ta[t - 1]];
    for (int i = 1; i < t; ++i) img[i] = ta[i - 1];
    out.images[a] = static_cast<int>(codec.encode(img));
  }
  return out;
}

TensorQuandle tensor_quandle(const ExplicitGroup& G, int t,
                             const GroupAutomorphism& theta,
                             std::size_t size_cap) {
  if (t < 1) throw Error("tensor_quandle: t must be positive");
  if (static_cast<int>(theta.images.size()) != G.n)
    throw NotAutomorphism("tensor_quandle: automorphism size mismatch");
  const std::vector<int> fix = fixed_elements(theta);
  std::uint64_t total = 1;
  for (int i = 0; i < t; ++i) {
    if (total > (std::uint64_t(1) << 40) / G.n)
      throw CapExceeded("tensor_quandle: |G|^t out of range");
    total *= G.n;
  }
  const std::uint64_t size = total / fix.size();
  if (size > size_cap)
    throw CapExceeded("tensor_quandle: " + std::to_string(size) +
                      " cosets exceed cap " + std::to_string(size_cap));
  if (total > (std::uint64_t(1) << 25))
    throw CapExceeded("tensor_quandle: tuple space too large to index");

  const TupleCodec codec{G.n, t, total};
  // coset index per tuple; representatives are least codes, found by scanning
  // codes in ascending order and marking whole cosets
  std::vector<int> coset_of(total, -1);
  std::vector<std::uint64_t> rep_codes;
  std::vector<int> tup(t), mul(t);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (coset_of[code] >= 0) continue;
    const int id = static_cast<int>(rep_codes.size());
    rep_codes.push_back(code);
    const auto x = codec.decode(code);
    for (int h : fix) {
      for (int i = 0; i < t; ++i) mul[i] = G.mul(x[i], h);
      coset_of[codec.encode(mul)] = id;
    }
  }
  if (rep_codes.size() != size)
    throw Error("tensor_quandle: coset count mismatch");

  const int m = static_cast<int>(size);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<int> xinv(t), w(t), v(t);
  for (int i = 0; i < m; ++i) {
    const auto x = codec.decode(rep_codes[i]);
    for (int k = 0; k < t; ++k) xinv[k] = G.inv(x[k]);
    for (int j = 0; j < m; ++j) {
      const auto y = codec.decode(rep_codes[j]);
      for (int k = 0; k < t; ++k) w[k] = G.mul(xinv[k], y[k]);
      // shift-and-twist, then multiply back by x
      v[0] = theta.images[w[t - 1]];
      for (int k = 1; k < t; ++k) v[k] = w[k - 1];
      for (int k = 0; k < t; ++k) v[k] = G.mul(x[k], v[k]);
      table[i][j] = coset_of[codec.encode(v)];
    }
  }

  TensorQuandle out;
  out.t = t;
  out.reps.resize(m);
  std::vector<std::string> labels;
  const bool with_labels = m <= 1024;
  if (with_labels) labels.resize(m);
  for (int i = 0; i < m; ++i) {
    out.reps[i] = codec.decode(rep_codes[i]);
    if (with_labels) {
      std::string l = "(";
      for (int k = 0; k < t; ++k) {
        if (k) l += ",";
        l += G.label(out.reps[i][k]);
      }
      labels[i] = l + ")H";
    }
  }
  out.table = make_left_quasigroup(std::move(table), std::move(labels));
  return out;
}

std::pair<ExplicitGroup, ConjClass> class_of_theta(const ExplicitGroup& G,
                                                   const GroupAutomorphism& theta,
                                                   std::size_t cap) {
  const int m = automorphism_order(theta);
  if (static_cast<std::size_t>(G.n) * m > cap)
    throw CapExceeded("class_of_theta: semidirect product exceeds cap");
  ExplicitGroup S = semidirect_with_automorphism(G, theta);
  const int x0 = (m > 1) ? G.n : 0;  // index of (1, theta)
  ConjClass cls = conjugacy_class_of(S, x0);
  // the class must be { (g theta(g)^-1, theta) : g in G }
  std::vector<int> expected;
  for (int g = 0; g < G.n; ++g) {
    const int e = G.mul(g, G.inv(theta.images[g]));
    expected.push_back((m > 1 ? 1 : 0) * G.n + e);
  }
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  if (expected != cls.members)
    throw Error("class_of_theta: class does not match the displacement form");
  return {std::move(S), std::move(cls)};
}

std::vector<Perm> shift_wreath_generators(const std::vector<Perm>& L_gens,
                                          int degree, int t) {
  if (t < 1) throw Error("shift_wreath_generators: t must be positive");
  const int N = degree * t;
  std::vector<Perm> out;
  for (const Perm& s : L_gens) {
    if (s.degree() != degree)
      throw DegreeMismatch("shift_wreath_generators: generator degree");
    std::vector<int> img(N);
    for (int i = 0; i < N; ++i) img[i] = i;
    for (int i = 0; i < degree; ++i) img[i] = s[i];
    out.emplace_back(std::move(img));
  }
  std::vector<int> shift(N);
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < degree; ++i)
      shift[j * degree + i] = ((j + 1) % t) * degree + i;
  out.emplace_back(std::move(shift));
  return out;
}

}  // namespace qk
