#include "fixtures.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "qk/construct.hpp"

namespace fixtures {

using qk::ExplicitGroup;
using qk::Perm;
using qk::QuandleTable;

std::vector<Perm> sym_gens(int n) {
  std::vector<int> tr(n);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return {Perm(tr), Perm(cyc)};
}

std::vector<Perm> alt_gens(int n) {
  // (0 1 2) and, for n > 3, an n- or (n-1)-cycle of even parity
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n <= 3) return {Perm(three)};
  std::vector<int> big(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;  // n-cycle, even
  } else {
    big[0] = 0;
    for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;  // (1..n-1) cycle
  }
  return {Perm(three), Perm(big)};
}

std::vector<Perm> dihedral_gens(int n) {
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return {Perm(rot), Perm(refl)};
}

ExplicitGroup S(int n) {
  return qk::group_from_permutations(n, sym_gens(n));
}

ExplicitGroup A(int n) {
  return qk::group_from_permutations(n, alt_gens(n));
}

ExplicitGroup Z(int n) { return qk::cyclic_group(n); }

ExplicitGroup D8() {
  return qk::group_from_permutations(4, dihedral_gens(4));
}

ExplicitGroup Q8() {
  // elements 0..7 = 1, -1, i, -i, j, -j, k, -k
  const auto idx = [](int axis, int sign) { return 2 * axis + (sign < 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  // axis multiplication: (axis, axis) -> (axis, sign)
  // 0 = scalar 1, 1 = i, 2 = j, 3 = k
  const auto mul_axes = [](int a, int b) -> std::pair<int, int> {
    if (a == 0) return {b, 1};
    if (b == 0) return {a, 1};
    if (a == b) return {0, -1};
    // i*j = k and cyclic; reversed order flips the sign
    const int c = 6 - a - b;  // the third axis among {1,2,3}
    const bool forward = (b - a + 3) % 3 == 1;
    return {c, forward ? 1 : -1};
  };
  for (int a = 0; a < 4; ++a)
    for (int sa : {1, -1})
      for (int b = 0; b < 4; ++b)
        for (int sb : {1, -1}) {
          auto [c, sc] = mul_axes(a, b);
          t[idx(a, sa)][idx(b, sb)] = idx(c, sa * sb * sc);
        }
  return qk::make_group(std::move(t),
                        {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

ExplicitGroup SL23() {
  // 2x2 matrices over F_3 with determinant 1
  std::vector<std::array<int, 4>> mats;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) mats.push_back({a, b, c, d});
  const int n = static_cast<int>(mats.size());
  const auto find = [&](const std::array<int, 4>& m) {
    for (int i = 0; i < n; ++i)
      if (mats[i] == m) return i;
    throw std::runtime_error("SL23 lookup");
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& x = mats[i];
      const auto& y = mats[j];
      t[i][j] = find({(x[0] * y[0] + x[1] * y[2]) % 3,
                      (x[0] * y[1] + x[1] * y[3]) % 3,
                      (x[2] * y[0] + x[3] * y[2]) % 3,
                      (x[2] * y[1] + x[3] * y[3]) % 3});
    }
  return qk::make_group(std::move(t));
}

ExplicitGroup S3xZ2() { return qk::direct_product(S(3), Z(2)); }

ExplicitGroup frobenius20() {
  const ExplicitGroup z5 = Z(5);
  std::vector<int> img(5);
  for (int i = 0; i < 5; ++i) img[i] = (2 * i) % 5;
  return qk::semidirect_with_automorphism(
      z5, qk::automorphism_from_images(z5, img));
}

std::vector<std::pair<std::string, ExplicitGroup>> fixture_groups() {
  std::vector<std::pair<std::string, ExplicitGroup>> out;
  out.emplace_back("S3", S(3));
  out.emplace_back("S4", S(4));
  out.emplace_back("A4", A(4));
  out.emplace_back("D8", D8());
  out.emplace_back("Q8", Q8());
  out.emplace_back("Z1", Z(1));
  out.emplace_back("Z4", Z(4));
  out.emplace_back("Z6", Z(6));
  out.emplace_back("Z12", Z(12));
  out.emplace_back("A5", A(5));
  out.emplace_back("S3xZ2", S3xZ2());
  out.emplace_back("F20", frobenius20());
  out.emplace_back("SL23", SL23());
  return out;
}

QuandleTable dihedral_quandle(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = ((2 * x - y) % n + n) % n;
  return qk::make_left_quasigroup(std::move(t));
}

QuandleTable trivial_quandle(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = y;
  return qk::make_left_quasigroup(std::move(t));
}

std::vector<std::pair<std::string, QuandleTable>> fixture_quandles(int max_size) {
  std::vector<std::pair<std::string, QuandleTable>> out;
  const auto add = [&](const std::string& name, QuandleTable q) {
    if (q.n <= max_size) out.emplace_back(name, std::move(q));
  };
  for (int n = 1; n <= 9; ++n) add("dihedral_Z" + std::to_string(n), dihedral_quandle(n));
  add("trivial_2", trivial_quandle(2));
  add("trivial_4", trivial_quandle(4));
  // affine quandles with multipliers other than -1
  const auto affine_zn = [&](int n, int f) {
    const ExplicitGroup zn = Z(n);
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i * f % n + n) % n;
    return qk::affine_quandle(zn, qk::automorphism_from_images(zn, img));
  };
  add("affine_Z5_f2", affine_zn(5, 2));
  add("affine_Z7_f3", affine_zn(7, 3));
  add("affine_Z8_f3", affine_zn(8, 3));
  add("affine_Z9_f2", affine_zn(9, 2));
  // conjugation quandles
  const ExplicitGroup s3 = S(3);
  const ExplicitGroup s4 = S(4);
  const ExplicitGroup a4 = A(4);
  const ExplicitGroup a5 = A(5);
  const auto class_of_order = [&](const ExplicitGroup& G, int ord) {
    for (const auto& cls : qk::conjugacy_classes(G))
      if (cls.representative != 0 &&
          qk::element_order(G, cls.representative) == ord)
        return cls.members;
    throw std::runtime_error("no class of requested order");
  };
  add("conj_S3_transpositions", qk::conj_quandle(s3, class_of_order(s3, 2)));
  add("conj_S4_transpositions",
      qk::conj_quandle(s4, [&] {
        for (const auto& cls : qk::conjugacy_classes(s4))
          if (cls.members.size() == 6 &&
              qk::element_order(s4, cls.representative) == 2)
            return cls.members;
        throw std::runtime_error("no transposition class");
      }()));
  add("conj_S4_4cycles", qk::conj_quandle(s4, class_of_order(s4, 4)));
  add("conj_A4_3cycles", qk::conj_quandle(a4, class_of_order(a4, 3)));
  add("conj_A5_5cycles", qk::conj_quandle(a5, class_of_order(a5, 5)));
  // coset quandles
  {
    const auto theta = qk::inner_automorphism(s3, [&] {
      for (int x = 1; x < s3.n; ++x)
        if (qk::element_order(s3, x) == 2) return x;
      return 1;
    }());
    std::vector<int> fix = qk::fixed_elements(theta);
    add("coset_S3_inner2_centralizer",
        qk::coset_quandle(s3, qk::SubgroupView{fix}, theta).table);
    add("coset_S3_inner2_trivialH",
        qk::coset_quandle(s3, qk::trivial_subgroup(), theta).table);
  }
  // tensor quandles
  add("tensor_Z2_t3", qk::tensor_quandle(Z(2), 3, qk::identity_automorphism(Z(2))).table);
  add("tensor_Z3_t2", qk::tensor_quandle(Z(3), 2, qk::identity_automorphism(Z(3))).table);
  add("tensor_S3_t2", qk::tensor_quandle(S(3), 2, qk::identity_automorphism(S(3))).table);
  if (max_size >= 60)
    add("tensor_A5_t2", qk::tensor_quandle(a5, 2, qk::identity_automorphism(a5)).table);
  return out;
}

}  // namespace fixtures
