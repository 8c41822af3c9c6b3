#include "qk/bigint.hpp"

#include <algorithm>

#include "qk/errors.hpp"

namespace qk {

BigUInt::BigUInt(std::uint64_t v) {
  limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUInt::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUInt& BigUInt::operator*=(std::uint64_t m) {
  if (m == 0) {
    limbs_.assign(1, 0);
    return *this;
  }
  const std::uint64_t lo = m & 0xffffffffu;
  const std::uint64_t hi = m >> 32;
  std::vector<std::uint32_t> out(limbs_.size() + 2, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const std::uint64_t x = limbs_[i];
    // x * m = x*lo + (x*hi << 32); both products fit in 64 bits
    std::uint64_t p = x * lo;
    std::size_t j = i;
    while (p) {
      p += out[j];
      out[j] = static_cast<std::uint32_t>(p & 0xffffffffu);
      p >>= 32;
      ++j;
    }
    p = x * hi;
    j = i + 1;
    while (p) {
      p += out[j];
      out[j] = static_cast<std::uint32_t>(p & 0xffffffffu);
      p >>= 32;
      ++j;
    }
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

bool BigUInt::operator<(const BigUInt& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
  }
  return false;
}

std::uint64_t BigUInt::mod(std::uint64_t m) const {
  if (m == 0) throw Error("BigUInt::mod: modulus is zero");
  // Horner over limbs, most significant first. Keeping the running value
  // below m (< 2^64) means r*2^32 + limb fits in unsigned __int128.
  unsigned __int128 r = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    r = (r << 32) | limbs_[i];
    r %= m;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t BigUInt::to_u64() const {
  if (!fits_u64()) throw OverflowError("BigUInt does not fit in 64 bits");
  std::uint64_t v = limbs_[0];
  if (limbs_.size() == 2) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return v;
}

std::string BigUInt::to_string() const {
  // repeated division by 10^9
  std::vector<std::uint32_t> work(limbs_);
  std::string out;
  if (work.size() == 1 && work[0] == 0) return "0";
  while (!(work.size() == 1 && work[0] == 0)) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (work.size() > 1 && work.back() == 0) work.pop_back();
    const bool last = work.size() == 1 && work[0] == 0;
    std::string chunk = std::to_string(rem);
    if (!last) chunk = std::string(9 - chunk.size(), '0') + chunk;
    out = chunk + out;
  }
  return out;
}

BigUInt BigUInt::pow(std::uint64_t base, unsigned exp) {
  BigUInt r{1};
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace qk
