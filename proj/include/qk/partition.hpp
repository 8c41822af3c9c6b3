#pragma once

#include <string>
#include <vector>

namespace qk {

/// Equivalence relation on {0, ..., n-1} in union-find form.
class Partition {
 public:
  /// All-singleton partition (the identity relation).
  explicit Partition(int n);

  /// One class containing everything.
  static Partition single_class(int n);
  static Partition from_classes(int n, const std::vector<std::vector<int>>& classes);
  /// Parse the serialized form "{0,2|1,3}"; every point must occur once.
  static Partition parse(const std::string& text, int n);

  int size() const { return static_cast<int>(parent_.size()); }
  int find(int x) const;
  /// Union; true if two distinct classes were merged.
  bool merge(int a, int b);
  bool same(int a, int b) const { return find(a) == find(b); }

  int class_count() const;
  bool is_singletons() const { return class_count() == size(); }
  bool is_single_class() const { return class_count() == 1; }

  /// Classes sorted by least element, elements ascending.
  std::vector<std::vector<int>> classes() const;
  /// Map point -> class id, ids numbered by least class element.
  std::vector<int> class_ids() const;

  /// True if every class of *this is contained in a class of `coarser`.
  bool refines(const Partition& coarser) const;

  /// Serialized class-list form, e.g. "{0,2|1,3}".
  std::string to_string() const;

  bool operator==(const Partition& o) const;
  bool operator!=(const Partition& o) const { return !(*this == o); }

 private:
  mutable std::vector<int> parent_;
};

}  // namespace qk
