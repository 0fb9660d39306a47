#include "hofd/error.hpp"

namespace hofd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::Resonance: return "resonance";
    case ErrorKind::SingularParameter: return "singular-parameter";
    case ErrorKind::NonGeneric: return "non-generic";
    case ErrorKind::Symmetry: return "symmetry";
    case ErrorKind::DegenerateParameter: return "degenerate-parameter";
    case ErrorKind::DegenerateExponent: return "degenerate-exponent";
    case ErrorKind::Internal: return "internal";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace hofd
