#pragma once

#include <stdexcept>
#include <string>

namespace hypoly {

/// Base class for all domain errors. `code()` is the machine-readable
/// identifier emitted by the CLI.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("PARSE_ERROR", msg) {}
};

struct NonGenericWeights : Error {
  explicit NonGenericWeights(const std::string& msg = "weight vector lies on a wall")
      : Error("NON_GENERIC", msg) {}
};

struct SetNotShort : Error {
  explicit SetNotShort(const std::string& msg) : Error("SET_NOT_SHORT", msg) {}
};

struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& msg = "monomial degree is not n-3")
      : Error("DEGREE_MISMATCH", msg) {}
};

struct BadShape : Error {
  explicit BadShape(const std::string& msg) : Error("BAD_SHAPE", msg) {}
};

struct NotAdjacent : Error {
  explicit NotAdjacent(const std::string& msg) : Error("NOT_ADJACENT", msg) {}
};

struct SameChamber : Error {
  explicit SameChamber(const std::string& msg = "inputs lie in the same chamber")
      : Error("SAME_CHAMBER", msg) {}
};

struct MorseInconsistency : Error {
  explicit MorseInconsistency(const std::string& msg)
      : Error("MORSE_INCONSISTENCY", msg) {}
};

struct NonIntegerPairing : Error {
  explicit NonIntegerPairing(const std::string& msg)
      : Error("NON_INTEGER_PAIRING", msg) {}
};

struct RecursionShape : Error {
  explicit RecursionShape(const std::string& msg = "malformed recursion state")
      : Error("RECURSION_SHAPE", msg) {}
};

struct UnsupportedGenus : Error {
  explicit UnsupportedGenus(const std::string& msg)
      : Error("UNSUPPORTED_GENUS", msg) {}
};

struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& msg)
      : Error("INVARIANT_VIOLATION", msg) {}
};

struct UnstablePoint : Error {
  explicit UnstablePoint(const std::string& msg) : Error("UNSTABLE_POINT", msg) {}
};

struct MomentViolation : Error {
  explicit MomentViolation(const std::string& msg)
      : Error("MOMENT_VIOLATION", msg) {}
};

struct MalformedResidue : Error {
  explicit MalformedResidue(const std::string& msg)
      : Error("MALFORMED_RESIDUE", msg) {}
};

struct NotClosed : Error {
  explicit NotClosed(const std::string& msg) : Error("NOT_CLOSED", msg) {}
};

struct ZeroQ : Error {
  explicit ZeroQ(const std::string& msg) : Error("ZERO_Q", msg) {}
};

}  // namespace hypoly
