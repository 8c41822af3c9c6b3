#pragma once

// Shared fixture builders for the unit and acceptance suites.

#include <string>
#include <utility>
#include <vector>

#include "qk/group.hpp"
#include "qk/perm.hpp"
#include "qk/quandle.hpp"

namespace fixtures {

// --- permutation generator sets ---------------------------------------------
std::vector<qk::Perm> sym_gens(int n);    // S_n on n points
std::vector<qk::Perm> alt_gens(int n);    // A_n on n points
std::vector<qk::Perm> dihedral_gens(int n);  // D_n acting on n points

// --- explicit groups ---------------------------------------------------------
qk::ExplicitGroup S(int n);     // symmetric group as a table
qk::ExplicitGroup A(int n);     // alternating group as a table
qk::ExplicitGroup Z(int n);     // cyclic
qk::ExplicitGroup D8();         // dihedral of order 8
qk::ExplicitGroup Q8();         // quaternion
qk::ExplicitGroup SL23();       // SL(2,3), order 24
qk::ExplicitGroup S3xZ2();
qk::ExplicitGroup frobenius20();  // Z_5 : Z_4 under x -> 2x

/// The standard acceptance fixture list: S_3, S_4, A_4, D_8, Q_8, several
/// Z_n, A_5, S_3 x Z_2, Frobenius-20, SL(2,3).
std::vector<std::pair<std::string, qk::ExplicitGroup>> fixture_groups();

// --- quandles ---------------------------------------------------------------
qk::QuandleTable dihedral_quandle(int n);  // x*y = 2x - y mod n
qk::QuandleTable trivial_quandle(int n);   // x*y = y

/// Labeled quandle fixture corpus (everything small enough for predicate
/// sweeps): dihedral/affine families, conjugation classes, coset and tensor
/// quandles.
std::vector<std::pair<std::string, qk::QuandleTable>> fixture_quandles(int max_size);

}  // namespace fixtures
