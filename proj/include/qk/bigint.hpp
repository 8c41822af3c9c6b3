#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qk {

/// Unsigned arbitrary-precision integer.
///
/// Group orders are products of orbit lengths and can exceed 64 bits
/// (a base-and-strong-generating-set on a few dozen points easily reaches
/// 10^13 and beyond), so everything order-valued in the library uses this
/// type. Only the operations the library actually needs are provided:
/// multiply by a machine word, compare, reduce mod a word, print.
class BigUInt {
 public:
  BigUInt() : limbs_{0} {}
  BigUInt(std::uint64_t v);  // NOLINT: implicit by design

  BigUInt& operator*=(std::uint64_t m);
  friend BigUInt operator*(BigUInt a, std::uint64_t m) {
    a *= m;
    return a;
  }

  bool operator==(const BigUInt& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigUInt& o) const { return !(*this == o); }
  bool operator<(const BigUInt& o) const;
  bool operator<=(const BigUInt& o) const { return *this < o || *this == o; }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  /// Remainder mod m (m > 0).
  std::uint64_t mod(std::uint64_t m) const;

  bool fits_u64() const { return limbs_.size() <= 2; }
  /// Value as u64; throws OverflowError if it does not fit.
  std::uint64_t to_u64() const;

  std::string to_string() const;

  /// b^e by repeated multiplication (e small).
  static BigUInt pow(std::uint64_t base, unsigned exp);

 private:
  void trim();
  // little-endian base 2^32 limbs, no leading zeros (zero is {0})
  std::vector<std::uint32_t> limbs_;
};

}  // namespace qk
