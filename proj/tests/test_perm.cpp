#include <doctest.h>

#include <random>

#include "qk/errors.hpp"
#include "qk/perm.hpp"

using qk::Perm;

namespace {

// hand compose on explicit image arrays: (p after q)(i) = p(q(i))
std::vector<int> hand_compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
  const Perm p = Perm::parse_cycles("(0 1)", 3);
  const Perm q = Perm::parse_cycles("(1 2)", 3);
  // oracle: hand-compose on 3 points
  const auto expected = hand_compose(p.images(), q.images());
  CHECK((p * q).images() == expected);
  CHECK(expected == std::vector<int>{1, 2, 0});  // the 3-cycle 0->1->2->0
  CHECK((p * q).cycles() == "(0 1 2)");
}

TEST_CASE("identity and inverse laws") {
  const Perm p = Perm::parse_cycles("(0 3 1)(2 4)", 5);
  CHECK(p * Perm(5) == p);
  CHECK(Perm(5) * p == p);
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
}

TEST_CASE("degree mismatch is an error") {
  CHECK_THROWS_AS(Perm(3) * Perm(4), qk::DegreeMismatch);
}

TEST_CASE("orders") {
  CHECK(Perm(4).order() == 1);
  CHECK(Perm::parse_cycles("(0 1 2)", 3).order() == 3);
  CHECK(Perm::parse_cycles("(0 1)(2 3 4)", 5).order() == 6);
}

TEST_CASE("cycle notation round trip") {
  CHECK(Perm(5).cycles() == "()");
  CHECK(Perm::parse_cycles("()", 5).is_identity());
  CHECK(Perm::parse_cycles("(0 1 2)(3 4)", 6).cycles() == "(0 1 2)(3 4)");
  // canonical form starts each cycle at its least element
  CHECK(Perm::parse_cycles("(2 0 1)", 3).cycles() == "(0 1 2)");
  CHECK(Perm::parse_cycles("(1 2 0)", 3) == Perm::parse_cycles("(0 1 2)", 3));

  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    const Perm p{img};
    CHECK(Perm::parse_cycles(p.cycles(), n) == p);
  }
}

TEST_CASE("cycle parser rejects bad input") {
  CHECK_THROWS_AS(Perm::parse_cycles("(0 1", 3), qk::ParseError);
  CHECK_THROWS_AS(Perm::parse_cycles("(0 0)", 3), qk::ParseError);
  CHECK_THROWS_AS(Perm::parse_cycles("(0 7)", 3), qk::ParseError);
  CHECK_THROWS_AS(Perm::parse_cycles("", 3), qk::ParseError);
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), qk::InvalidTable);
}

TEST_CASE("conjugate and commutator") {
  const Perm g = Perm::parse_cycles("(0 1 2 3)", 4);
  const Perm p = Perm::parse_cycles("(0 1)", 4);
  // g (0 1) g^-1 relabels the moved points by g
  CHECK(qk::conjugate(g, p).cycles() == "(1 2)");
  CHECK(qk::commutator(g, g).is_identity());
}
