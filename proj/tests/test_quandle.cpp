#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qk/errors.hpp"
#include "qk/quandle.hpp"

using fixtures::dihedral_quandle;
using fixtures::trivial_quandle;
using qk::Partition;
using qk::QuandleTable;
using qk::TableClass;

TEST_CASE("validate classifies tables") {
  // dihedral Z_3: all 27 triples checked by the validator
  const auto r3 = qk::validate(dihedral_quandle(3));
  CHECK(r3.cls == TableClass::Quandle);
  CHECK(r3.rows_bijective);
  CHECK(r3.idempotent);
  CHECK(r3.left_distributive);

  CHECK(qk::validate(trivial_quandle(3)).cls == TableClass::Quandle);

  // corrupt a row: duplicate entry
  auto broken = dihedral_quandle(3).mult;
  broken[1][0] = broken[1][1];
  const auto rb = qk::validate(broken);
  CHECK(rb.cls == TableClass::NotLeftQuasigroup);
  CHECK(!rb.rows_bijective);
  CHECK(rb.row_witness[0] == 1);
  CHECK_THROWS_AS(qk::make_left_quasigroup(broken), qk::InvalidTable);

  // constant-shift rows make a rack that is not idempotent: x*y = y+1 mod n
  std::vector<std::vector<int>> rack(3, std::vector<int>(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) rack[x][y] = (y + 1) % 3;
  const auto rr = qk::validate(rack);
  CHECK(rr.cls == TableClass::Rack);
  CHECK(rr.idempotence_witness == 0);

  // parallel scan agrees with the sequential one
  const auto big = fixtures::dihedral_quandle(64);
  CHECK(qk::validate(big, 4).cls == qk::validate(big, 1).cls);
  CHECK(qk::validate(big, 4).cls == TableClass::Quandle);
}

TEST_CASE("left translations and division") {
  const QuandleTable q = dihedral_quandle(5);
  for (int x = 0; x < 5; ++x) {
    const qk::Perm lx = q.left_translation(x);
    for (int y = 0; y < 5; ++y) {
      CHECK(q.mul(x, q.ld(x, y)) == y);
      CHECK(q.ld(x, q.mul(x, y)) == y);
      CHECK(lx[y] == q.mul(x, y));
    }
  }
}

TEST_CASE("lmlt and dis orders") {
  CHECK(qk::lmlt(dihedral_quandle(3)).order().to_u64() == 6);
  CHECK(qk::dis(dihedral_quandle(3)).order().to_u64() == 3);
  CHECK(qk::lmlt(trivial_quandle(4)).order().is_one());
  CHECK(qk::dis(trivial_quandle(4)).order().is_one());

  // affine(Z_4, -1): Dis = <translation by 2>, order 2
  const QuandleTable z4 = dihedral_quandle(4);
  CHECK(qk::dis(z4).order().to_u64() == 2);
  CHECK(qk::lmlt(z4).order().to_u64() == 4);

  // oracle: exhaustive closure of the generating rows
  for (const auto& [name, q] : fixtures::fixture_quandles(24)) {
    CAPTURE(name);
    std::vector<qk::Perm> rows;
    for (int x = 0; x < q.n; ++x) rows.push_back(q.left_translation(x));
    CHECK(qk::BigUInt{oracle::closure(q.n, rows).size()} ==
          qk::lmlt(q).order());
    // Dis contains every L_x L_y^{-1}
    const qk::PermGroup d = qk::dis(q);
    for (int x = 0; x < q.n; ++x)
      for (int y = 0; y < q.n; ++y)
        CHECK(d.contains(q.left_translation(x) *
                         q.left_translation(y).inverse()));
  }
}

TEST_CASE("connectivity and orbits") {
  CHECK(qk::is_connected(dihedral_quandle(3)));
  CHECK(qk::orbits(dihedral_quandle(4)).to_string() == "{0,2|1,3}");
  CHECK(!qk::is_connected(trivial_quandle(2)));
  // orbits of LMlt and Dis coincide on idempotent tables
  for (const auto& [name, q] : fixtures::fixture_quandles(24)) {
    CAPTURE(name);
    CHECK(qk::orbits(q) == qk::dis(q).orbit_partition());
  }
}

TEST_CASE("cayley kernel") {
  CHECK(qk::cayley_kernel(dihedral_quandle(4)).to_string() == "{0,2|1,3}");
  CHECK(qk::is_faithful(dihedral_quandle(3)));
  CHECK(qk::cayley_kernel(trivial_quandle(3)).is_single_class());
}

TEST_CASE("subquandle closure") {
  const QuandleTable z5 = dihedral_quandle(5);
  CHECK(qk::subquandle_closure(z5, {2}) == std::vector<int>{2});
  CHECK(qk::subquandle_closure(z5, {0, 1}) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(qk::subquandle_closure(trivial_quandle(4), {0, 1}) ==
        std::vector<int>{0, 1});
  // closure really is closed under both operations
  const QuandleTable z6 = dihedral_quandle(6);
  const auto cl = qk::subquandle_closure(z6, {0, 2});
  for (int a : cl)
    for (int b : cl) {
      CHECK(std::binary_search(cl.begin(), cl.end(), z6.mul(a, b)));
      CHECK(std::binary_search(cl.begin(), cl.end(), z6.ld(a, b)));
    }
}

TEST_CASE("superfaithful") {
  CHECK(qk::is_superfaithful(dihedral_quandle(3)).ok);
  const auto w = qk::is_superfaithful(dihedral_quandle(4));
  CHECK(!w.ok);
  CHECK(w.x == 0);
  CHECK(w.y == 2);  // L_0 fixes 2: -2 = 2 mod 4
  CHECK(qk::is_superfaithful(dihedral_quandle(1)).ok);
}

TEST_CASE("superconnected") {
  CHECK(qk::is_superconnected(dihedral_quandle(3)).ok);
  const auto w4 = qk::is_superconnected(dihedral_quandle(4));
  CHECK(!w4.ok);
  // first failing pair: closure of {0,1} is the whole (disconnected) quandle
  CHECK(w4.x == 0);
  CHECK(w4.y == 1);
  const auto wt = qk::is_superconnected(trivial_quandle(3));
  CHECK(!wt.ok);
  CHECK(wt.x == 0);
  CHECK(wt.y == 1);

  // oracle: recompute via fresh closure + restricted connectivity per pair
  for (const auto& [name, q] : fixtures::fixture_quandles(16)) {
    CAPTURE(name);
    bool expect = true;
    for (int x = 0; x < q.n && expect; ++x)
      for (int y = x + 1; y < q.n && expect; ++y) {
        const auto sub = qk::subquandle_closure(q, {x, y});
        if (!qk::is_connected(qk::subquandle_table(q, sub))) expect = false;
      }
    CHECK(qk::is_superconnected(q).ok == expect);
  }
}

TEST_CASE("latin") {
  CHECK(qk::is_latin(dihedral_quandle(3)));
  CHECK(!qk::is_latin(dihedral_quandle(4)));
  CHECK(qk::is_latin(dihedral_quandle(1)));
}

TEST_CASE("power quandle") {
  const QuandleTable z3 = dihedral_quandle(3);
  CHECK(qk::power_quandle(z3, 1).mult == z3.mult);
  CHECK(qk::power_quandle(z3, 0).mult == trivial_quandle(3).mult);
  CHECK(qk::power_quandle(z3, 2).mult == trivial_quandle(3).mult);

  // rows equal n-fold self-composition; negative powers use row inverses
  const QuandleTable q = fixtures::fixture_quandles(12)[4].second;
  for (int n : {-2, -1, 0, 1, 2, 3, 5}) {
    const QuandleTable p = qk::power_quandle(q, n);
    for (int x = 0; x < q.n; ++x) {
      qk::Perm expect(q.n);
      const qk::Perm lx = q.left_translation(x);
      for (int i = 0; i < std::abs(n); ++i)
        expect = (n > 0) ? lx * expect : lx.inverse() * expect;
      CHECK(p.left_translation(x) == expect);
    }
  }
}

TEST_CASE("quotient") {
  const QuandleTable z4 = dihedral_quandle(4);
  const Partition lambda = qk::cayley_kernel(z4);
  const auto quot = qk::quotient(z4, lambda);
  CHECK(quot.table.n == 2);
  CHECK(quot.table.mult == trivial_quandle(2).mult);
  CHECK(quot.natural_map == std::vector<int>{0, 1, 0, 1});

  CHECK(qk::quotient(z4, Partition(4)).table.mult == z4.mult);
  CHECK(qk::quotient(z4, Partition::single_class(4)).table.n == 1);

  CHECK_THROWS_AS(qk::quotient(z4, Partition::parse("{0,1|2,3}", 4)),
                  qk::NotACongruence);
}

TEST_CASE("isomorphism search") {
  const QuandleTable z3 = dihedral_quandle(3);
  const auto self = qk::are_isomorphic(z3, z3);
  REQUIRE(self.has_value());
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      CHECK((*self)[z3.mul(x, y)] == z3.mul((*self)[x], (*self)[y]));

  CHECK(!qk::are_isomorphic(z3, trivial_quandle(3)).has_value());
  CHECK(!qk::are_isomorphic(z3, dihedral_quandle(4)).has_value());

  // a relabeled table is recognized
  const QuandleTable z5 = dihedral_quandle(5);
  std::vector<int> relabel{3, 0, 4, 1, 2};
  std::vector<std::vector<int>> t(5, std::vector<int>(5));
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      t[relabel[x]][relabel[y]] = relabel[z5.mul(x, y)];
  CHECK(qk::are_isomorphic(z5, qk::make_left_quasigroup(t)).has_value());
}

TEST_CASE("terms and counting relation") {
  const QuandleTable z4 = dihedral_quandle(4);
  const qk::Term s = qk::parse_term("x*y");
  const qk::Term t = qk::parse_term("y");
  // p(x) counts fixed points of L_x: 2 for every x here
  CHECK(qk::term_count_relation(z4, s, t).is_single_class());
  CHECK(qk::term_count_relation(z4, s, s).is_single_class());

  const qk::Term nested = qk::parse_term("(x*y)\\x");
  CHECK(qk::eval_term(z4, nested, 1, 2) == z4.ld(z4.mul(1, 2), 1));
  CHECK_THROWS_AS(qk::parse_term("x*"), qk::ParseError);
  CHECK_THROWS_AS(qk::parse_term("z"), qk::ParseError);

  // on a superfaithful quandle p(x) = 1 for all x
  const QuandleTable z5 = dihedral_quandle(5);
  CHECK(qk::term_count_relation(z5, s, t).is_single_class());
}

TEST_CASE("rack rows are automorphisms") {
  for (const auto& [name, q] : fixtures::fixture_quandles(24)) {
    CAPTURE(name);
    bool ok = true;
    for (int z = 0; z < q.n && ok; ++z)
      for (int x = 0; x < q.n && ok; ++x)
        for (int y = 0; y < q.n && ok; ++y)
          ok = q.mul(z, q.mul(x, y)) == q.mul(q.mul(z, x), q.mul(z, y));
    CHECK(ok);
  }
}

TEST_CASE("predicate implications on fixtures") {
  for (const auto& [name, q] : fixtures::fixture_quandles(30)) {
    CAPTURE(name);
    const bool sc = qk::is_superconnected(q).ok;
    const bool sf = qk::is_superfaithful(q).ok;
    const bool latin = qk::is_latin(q);
    if (sc) CHECK(sf);     // superconnected implies superfaithful
    if (latin) CHECK(sc);  // finite latin implies superconnected
  }
}
