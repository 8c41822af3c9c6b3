#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace qk {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct InvalidTable : Error {
  using Error::Error;
};

struct NotTransitive : Error {
  using Error::Error;
};

struct NotInvariant : Error {
  using Error::Error;
};

struct NotSubgroup : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct NotPElement : Error {
  using Error::Error;
};

struct NotPiElement : Error {
  using Error::Error;
};

struct NotSylowCyclic : Error {
  using Error::Error;
};

struct NotAbelian : Error {
  using Error::Error;
};

struct NotAutomorphism : Error {
  using Error::Error;
};

struct NotClosedUnderConjugation : Error {
  using Error::Error;
};

struct SubgroupNotFixed : Error {
  using Error::Error;
};

struct TooSmall : Error {
  using Error::Error;
};

/// Quotient by a relation that fails the compatibility laws; carries the
/// offending quadruple (x, y, z, op) where op is 0 for * and 1 for backslash.
struct NotACongruence : Error {
  NotACongruence(const std::string& msg, std::array<int, 4> w)
      : Error(msg), witness(w) {}
  std::array<int, 4> witness;
};

/// File-format error; message already carries "path:line:".
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qk
