#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qk {

/// Permutation of {0, ..., n-1}, stored as its image array.
///
/// Composition follows function application: (p*q)(i) = p(q(i)), i.e. q acts
/// first. All group-theoretic code in the library reads products this way.
class Perm {
 public:
  /// Identity on `degree` points.
  explicit Perm(int degree);
  /// From an image array; validates that it is a bijection.
  explicit Perm(std::vector<int> images);

  /// Parse cycle notation, e.g. "(0 1 2)(3 4)"; "()" is the identity.
  /// Points are whitespace-separated 0-based integers below `degree`.
  static Perm parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Order as lcm of cycle lengths; throws OverflowError past 2^63.
  std::uint64_t order() const;

  /// Smallest point not fixed, or -1 for the identity.
  int smallest_moved() const;

  /// Canonical cycle notation: cycles sorted by least element, each cycle
  /// starting at its least element, fixed points omitted. Identity is "()".
  std::string cycles() const;

  friend Perm operator*(const Perm& p, const Perm& q);

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  std::size_t hash() const;

 private:
  std::vector<int> images_;
};

/// Conjugate g p g^-1.
Perm conjugate(const Perm& g, const Perm& p);

/// Commutator a b a^-1 b^-1.
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace qk
