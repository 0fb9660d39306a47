#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hofd {

enum class ErrorKind {
  InvalidDimension,
  InvalidArgument,
  Pole,
  Domain,
  NonConvergence,
  Resonance,
  SingularParameter,
  NonGeneric,
  Symmetry,
  DegenerateParameter,
  DegenerateExponent,
  Internal,
  Usage,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind; the
/// CLI copies it into the "error.kind" field of its records.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hofd
