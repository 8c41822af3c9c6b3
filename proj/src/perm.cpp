#include "qk/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "qk/errors.hpp"

namespace qk {

Perm::Perm(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw InvalidTable("image array is not a bijection");
    seen[v] = 1;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm p(0);
  p.images_ = std::move(inv);
  return p;
}

std::uint64_t Perm::order() const {
  std::vector<char> done(images_.size(), 0);
  std::uint64_t ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (done[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !done[j]; j = images_[j]) {
      done[j] = 1;
      ++len;
    }
    const std::uint64_t g = std::gcd(ord, len);
    const std::uint64_t factor = len / g;
    if (ord > (std::uint64_t(1) << 63) / factor)
      throw OverflowError("permutation order exceeds 2^63");
    ord *= factor;
  }
  return ord;
}

int Perm::smallest_moved() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return -1;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  std::vector<int> r(p.images_.size());
  for (int i = 0; i < p.degree(); ++i) r[i] = p.images_[q.images_[i]];
  Perm out(0);
  out.images_ = std::move(r);
  return out;
}

Perm conjugate(const Perm& g, const Perm& p) { return g * p * g.inverse(); }

Perm commutator(const Perm& a, const Perm& b) {
  return a * b * a.inverse() * b.inverse();
}

std::size_t Perm::hash() const {
  // FNV-1a over the image words
  std::size_t h = 1469598103934665603ull;
  for (int v : images_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Perm::cycles() const {
  std::vector<char> done(images_.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) {
      done[i] = 1;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !done[j]; j = images_[j]) {
      done[j] = 1;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("cycle notation: expected '(' at position " +
                       std::to_string(i) + " in \"" + text + "\"");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("cycle notation: expected point at position " +
                         std::to_string(i) + " in \"" + text + "\"");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v >= degree)
        throw ParseError("cycle notation: point " + std::to_string(v) +
                         " out of range for degree " + std::to_string(degree));
      if (used[v])
        throw ParseError("cycle notation: point " + std::to_string(v) +
                         " repeated");
      used[v] = 1;
      cyc.push_back(v);
      skip_ws();
    }
    if (i >= text.size())
      throw ParseError("cycle notation: unterminated cycle in \"" + text + "\"");
    ++i;  // ')'
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) img[cyc[k]] = cyc[k + 1];
    if (cyc.size() > 1) img[cyc.back()] = cyc.front();
    saw_cycle = true;
    skip_ws();
  }
  if (!saw_cycle)
    throw ParseError("cycle notation: empty input (identity is \"()\")");
  return Perm(std::move(img));
}

}  // namespace qk
