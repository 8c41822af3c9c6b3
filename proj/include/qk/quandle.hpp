#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qk/partition.hpp"
#include "qk/perm.hpp"
#include "qk/perm_group.hpp"

namespace qk {

inline constexpr std::size_t kDefaultQuandleCap = 5000;

/// Left quasigroup / rack / quandle as an operation table.
/// mult[x][y] = x*y; every row is a bijection and ldiv holds the row
/// inverses (x\y). Immutable after construction.
struct QuandleTable {
  int n = 0;
  std::vector<std::vector<int>> mult;
  std::vector<std::vector<int>> ldiv;
  std::vector<std::string> labels;  // empty or size n

  int mul(int x, int y) const { return mult[x][y]; }
  int ld(int x, int y) const { return ldiv[x][y]; }
  Perm left_translation(int x) const { return Perm(mult[x]); }
  std::string label(int x) const {
    return labels.empty() ? std::to_string(x) : labels[x];
  }
};

/// Build from a multiplication table; rows must be bijections.
QuandleTable make_left_quasigroup(std::vector<std::vector<int>> mult,
                                  std::vector<std::string> labels = {});

enum class TableClass { NotLeftQuasigroup, LeftQuasigroup, Rack, Quandle };

struct ValidationReport {
  TableClass cls = TableClass::NotLeftQuasigroup;
  bool rows_bijective = false;
  bool idempotent = false;
  bool left_distributive = false;
  // witnesses, each valid only when the matching flag is false
  std::array<int, 3> row_witness{-1, -1, -1};     // x, y1, y2 with x*y1 = x*y2
  int idempotence_witness = -1;                   // x with x*x != x
  std::array<int, 3> distributivity_witness{-1, -1, -1};  // (x,y,z)

  bool is_quandle() const { return cls == TableClass::Quandle; }
};

std::string to_string(TableClass c);

/// Classify a raw square table; `jobs` parallelizes the distributivity scan.
ValidationReport validate(const std::vector<std::vector<int>>& mult, int jobs = 1);
ValidationReport validate(const QuandleTable& Q, int jobs = 1);

/// Left multiplication group, generated by the rows.
PermGroup lmlt(const QuandleTable& Q);
/// Displacement group: normal closure in LMlt of { L_x L_0^{-1} }.
PermGroup dis(const QuandleTable& Q);

Partition orbits(const QuandleTable& Q);
bool is_connected(const QuandleTable& Q);

/// Relation of equal rows.
Partition cayley_kernel(const QuandleTable& Q);
bool is_faithful(const QuandleTable& Q);

/// Smallest subset containing the seeds and closed under * and \.
std::vector<int> subquandle_closure(const QuandleTable& Q, std::vector<int> seeds);

/// Restriction to a closed subset (indices keep the subset's sorted order).
QuandleTable subquandle_table(const QuandleTable& Q, const std::vector<int>& elems);

struct WitnessPair {
  bool ok = true;
  int x = -1, y = -1;
};

/// Every row fixes only its own index; witness is the first (x, y) with
/// y != x and x*y = y.
WitnessPair is_superfaithful(const QuandleTable& Q);

/// Every 2-generated subquandle is connected; witness is the first failing
/// pair in lexicographic order. Closure verdicts are memoized by subset.
WitnessPair is_superconnected(const QuandleTable& Q);

/// Columns are bijections too.
bool is_latin(const QuandleTable& Q);

/// Table with rows L_x^n (negative n uses row inverses).
QuandleTable power_quandle(const QuandleTable& Q, int n);

/// Throws NotACongruence (with a witness quadruple) when alpha fails the
/// compatibility laws; see congruence_violation.
struct QuotientResult {
  QuandleTable table;
  std::vector<int> natural_map;  // element -> class index
};
QuotientResult quotient(const QuandleTable& Q, const Partition& alpha);

/// Direct compatibility check: returns (x, y, z, op) with x ~ y but
/// op(x,z) !~ op(y,z) or op(z,x) !~ op(z,y); op 0 is *, 1 is \.
/// Empty when alpha is a congruence.
std::optional<std::array<int, 4>> congruence_violation(const QuandleTable& Q,
                                                       const Partition& alpha);

/// Isomorphism search: backtracking over images of a closure-generating
/// sequence with translation-profile pruning.
std::optional<std::vector<int>> are_isomorphic(const QuandleTable& a,
                                               const QuandleTable& b);

/// Binary term over variables x, y and the operations *, \.
struct Term {
  struct Node {
    char kind;  // 'x', 'y', '*', '\\'
    int left = -1, right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;
};

/// Grammar: term := atom (op atom)*, left associative; atom := 'x' | 'y' |
/// '(' term ')'; op := '*' | '\'.
Term parse_term(const std::string& text);
int eval_term(const QuandleTable& Q, const Term& t, int x, int y);

/// Partition of Q by the counting invariant p(x) = #{ y : s(x,y) = t(x,y) }.
Partition term_count_relation(const QuandleTable& Q, const Term& s, const Term& t);

}  // namespace qk
