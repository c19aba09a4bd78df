#include "satogr/error.hpp"

namespace satogr {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::DependentGenerators: return "DependentGenerators";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::NotSigmaInvariant: return "NotSigmaInvariant";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::NotAFamily: return "NotAFamily";
    case ErrorKind::NonSquareWitness: return "NonSquareWitness";
    case ErrorKind::NonzeroIndex: return "NonzeroIndex";
    case ErrorKind::OddParity: return "OddParity";
    case ErrorKind::UnsoundTruncation: return "UnsoundTruncation";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotRingPoint: return "NotRingPoint";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace satogr
