#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qk/group.hpp"
#include "qk/perm_group.hpp"
#include "qk/quandle.hpp"
#include "qk/structure.hpp"

namespace qk {

/// .qnd: first significant line is n, then n lines of n 0-based integers
/// (line x is the row of L_x). '#' starts a comment. Parse errors carry
/// "name:line:" positions.
std::vector<std::vector<int>> parse_qnd(std::istream& in, const std::string& name);
std::vector<std::vector<int>> read_qnd_raw(const std::string& path);
/// Parses and validates row bijectivity (InvalidTable otherwise).
QuandleTable read_qnd(const std::string& path);
void write_qnd(const QuandleTable& Q, std::ostream& out);
void write_qnd(const QuandleTable& Q, const std::string& path);

/// .grp: "table n" + n rows of n indices, or "perm d" + one generator per
/// line in cycle notation. Permutation inputs are closed into a table when
/// the order is at most table_cap; otherwise only the PermGroup survives.
struct LoadedGroup {
  std::optional<ExplicitGroup> group;
  std::optional<PermGroup> perms;
  std::vector<Perm> perm_gens;  // nonempty iff the file was a "perm" file
  int degree = 0;               // for perm files
};
LoadedGroup parse_grp(std::istream& in, const std::string& name,
                      std::size_t table_cap = kDefaultTableCap);
LoadedGroup read_grp(const std::string& path,
                     std::size_t table_cap = kDefaultTableCap);
void write_grp(const ExplicitGroup& G, std::ostream& out);

/// Stable-key-order JSON (schema 1) for the props/scan surface.
nlohmann::ordered_json report_to_json(const QuandleClassReport& r);

}  // namespace qk
