#include "qk/io.hpp"

#include <fstream>
#include <sstream>

#include "qk/errors.hpp"

namespace qk {

namespace {

// strip comments and whitespace; yields (line_number, content) pairs
std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    out.emplace_back(no, line.substr(a, b - a + 1));
  }
  return out;
}

std::vector<int> parse_int_row(const std::string& text, const std::string& name,
                               int line_no) {
  std::istringstream ss(text);
  std::vector<int> row;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      row.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(name + ":" + std::to_string(line_no) +
                       ": expected integer, got \"" + tok + "\"");
    }
  }
  return row;
}

}  // namespace

std::vector<std::vector<int>> parse_qnd(std::istream& in, const std::string& name) {
  const auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(name + ":1: empty file");
  const auto head = parse_int_row(lines[0].second, name, lines[0].first);
  if (head.size() != 1 || head[0] <= 0)
    throw ParseError(name + ":" + std::to_string(lines[0].first) +
                     ": expected a positive size on the first line");
  const int n = head[0];
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError(name + ": expected " + std::to_string(n) +
                     " rows, found " + std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> mult;
  for (int x = 0; x < n; ++x) {
    auto row = parse_int_row(lines[x + 1].second, name, lines[x + 1].first);
    if (static_cast<int>(row.size()) != n)
      throw ParseError(name + ":" + std::to_string(lines[x + 1].first) +
                       ": expected " + std::to_string(n) + " entries, got " +
                       std::to_string(row.size()));
    for (int v : row)
      if (v < 0 || v >= n)
        throw ParseError(name + ":" + std::to_string(lines[x + 1].first) +
                         ": entry " + std::to_string(v) + " out of range");
    mult.push_back(std::move(row));
  }
  return mult;
}

std::vector<std::vector<int>> read_qnd_raw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return parse_qnd(in, path);
}

QuandleTable read_qnd(const std::string& path) {
  return make_left_quasigroup(read_qnd_raw(path));
}

void write_qnd(const QuandleTable& Q, std::ostream& out) {
  out << Q.n << "\n";
  for (int x = 0; x < Q.n; ++x) {
    for (int y = 0; y < Q.n; ++y) {
      if (y) out << ' ';
      out << Q.mult[x][y];
    }
    out << "\n";
  }
}

void write_qnd(const QuandleTable& Q, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open for writing");
  write_qnd(Q, out);
}

LoadedGroup parse_grp(std::istream& in, const std::string& name,
                      std::size_t table_cap) {
  const auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(name + ":1: empty file");
  std::istringstream head(lines[0].second);
  std::string kind;
  long long param = 0;
  head >> kind >> param;
  if (head.fail() || param <= 0)
    throw ParseError(name + ":" + std::to_string(lines[0].first) +
                     ": expected \"table n\" or \"perm d\"");
  LoadedGroup out;
  if (kind == "table") {
    const int n = static_cast<int>(param);
    if (static_cast<int>(lines.size()) != n + 1)
      throw ParseError(name + ": expected " + std::to_string(n) + " rows");
    std::vector<std::vector<int>> t;
    for (int x = 0; x < n; ++x) {
      auto row = parse_int_row(lines[x + 1].second, name, lines[x + 1].first);
      if (static_cast<int>(row.size()) != n)
        throw ParseError(name + ":" + std::to_string(lines[x + 1].first) +
                         ": expected " + std::to_string(n) + " entries");
      t.push_back(std::move(row));
    }
    try {
      out.group = make_group(std::move(t));
    } catch (const InvalidTable& e) {
      throw ParseError(name + ": " + e.what());
    }
    return out;
  }
  if (kind == "perm") {
    const int d = static_cast<int>(param);
    out.degree = d;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      try {
        out.perm_gens.push_back(Perm::parse_cycles(lines[i].second, d));
      } catch (const ParseError& e) {
        throw ParseError(name + ":" + std::to_string(lines[i].first) + ": " +
                         e.what());
      }
    }
    out.perms = PermGroup(d, out.perm_gens);
    try {
      out.group = group_from_permutations(d, out.perm_gens, table_cap);
    } catch (const CapExceeded&) {
      // keep only the permutation form
    }
    return out;
  }
  throw ParseError(name + ":" + std::to_string(lines[0].first) +
                   ": unknown format \"" + kind + "\"");
}

LoadedGroup read_grp(const std::string& path, std::size_t table_cap) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return parse_grp(in, path, table_cap);
}

void write_grp(const ExplicitGroup& G, std::ostream& out) {
  out << "table " << G.n << "\n";
  for (int a = 0; a < G.n; ++a) {
    for (int b = 0; b < G.n; ++b) {
      if (b) out << ' ';
      out << G.table[a][b];
    }
    out << "\n";
  }
}

nlohmann::ordered_json report_to_json(const QuandleClassReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = r.n;
  j["class"] = to_string(r.cls);
  j["connected"] = r.connected;
  j["faithful"] = r.faithful;
  j["latin"] = r.latin;
  j["superfaithful"] = r.superfaithful;
  j["superconnected"] = r.superconnected;
  j["simple"] = r.simple;
  j["primitive"] = r.primitive;
  j["solvable_dis"] = r.solvable_dis;
  j["abelian_dis"] = r.abelian_dis;
  if (r.lmlt_order.fits_u64())
    j["lmlt_order"] = r.lmlt_order.to_u64();
  else
    j["lmlt_order"] = r.lmlt_order.to_string();
  if (r.dis_order.fits_u64())
    j["dis_order"] = r.dis_order.to_u64();
  else
    j["dis_order"] = r.dis_order.to_string();
  j["orbit_sizes"] = r.orbit_sizes;
  j["cayley_classes"] = r.cayley_classes;
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.witnesses) w[k] = v;
  j["witnesses"] = w;
  j["conjecture"] = {
      {"counterexample_i", r.conjecture.counterexample_i},
      {"counterexample_ii", r.conjecture.counterexample_ii},
  };
  return j;
}

}  // namespace qk
