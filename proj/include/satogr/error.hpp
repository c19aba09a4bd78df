#pragma once

#include <stdexcept>
#include <string>

namespace satogr {

enum class ErrorKind {
  ZeroInput,
  InsufficientPrecision,
  DependentGenerators,
  WindowTooSmall,
  IndexMismatch,
  NotSigmaInvariant,
  NotAlternating,
  NotIsotropic,
  NotAFamily,
  NonSquareWitness,
  NonzeroIndex,
  OddParity,
  UnsoundTruncation,
  NotClosed,
  NotRingPoint,
  NotInvolution,
  NotNormalizable,
  ParseError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace satogr
