#include "qk/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qk/errors.hpp"

namespace qk {

Partition::Partition(int n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

Partition Partition::single_class(int n) {
  Partition p(n);
  for (int i = 1; i < n; ++i) p.merge(0, i);
  return p;
}

Partition Partition::from_classes(int n, const std::vector<std::vector<int>>& classes) {
  Partition p(n);
  std::vector<char> seen(n, 0);
  for (const auto& cls : classes) {
    for (int x : cls) {
      if (x < 0 || x >= n) throw Error("partition class element out of range");
      if (seen[x]) throw Error("partition classes overlap");
      seen[x] = 1;
      p.merge(cls.front(), x);
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw Error("partition classes do not cover the carrier");
  return p;
}

int Partition::find(int x) const {
  int root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    int next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool Partition::merge(int a, int b) {
  int ra = find(a), rb = find(b);
  if (ra == rb) return false;
  // smaller index wins: keeps class representatives deterministic
  if (rb < ra) std::swap(ra, rb);
  parent_[rb] = ra;
  return true;
}

int Partition::class_count() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    if (find(i) == i) ++c;
  return c;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out;
  std::vector<int> slot(size(), -1);
  for (int i = 0; i < size(); ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;  // least elements appear in ascending order by construction
}

std::vector<int> Partition::class_ids() const {
  std::vector<int> ids(size(), -1);
  std::vector<int> slot(size(), -1);
  int next = 0;
  for (int i = 0; i < size(); ++i) {
    const int r = find(i);
    if (slot[r] < 0) slot[r] = next++;
    ids[i] = slot[r];
  }
  return ids;
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) throw Error("partition size mismatch");
  for (int i = 0; i < size(); ++i)
    if (!coarser.same(i, find(i))) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first_class = true;
  for (const auto& cls : classes()) {
    if (!first_class) out << '|';
    first_class = false;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out << ',';
      out << cls[i];
    }
  }
  out << '}';
  return out.str();
}

bool Partition::operator==(const Partition& o) const {
  if (size() != o.size()) return false;
  return class_ids() == o.class_ids();
}

Partition Partition::parse(const std::string& text, int n) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw ParseError("partition: expected {...|...}");
  std::vector<std::vector<int>> classes;
  std::vector<int> cur;
  std::string num;
  const auto flush_num = [&] {
    if (num.empty()) throw ParseError("partition: empty element");
    cur.push_back(std::stoi(num));
    num.clear();
  };
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
    } else if (c == ',') {
      flush_num();
    } else if (c == '|') {
      flush_num();
      classes.push_back(cur);
      cur.clear();
    } else {
      throw ParseError(std::string("partition: unexpected character '") + c + "'");
    }
  }
  if (!num.empty()) flush_num();
  if (!cur.empty()) classes.push_back(cur);
  return from_classes(n, classes);
}

}  // namespace qk
