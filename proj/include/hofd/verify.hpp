#pragma once

// Randomized and exhaustive identity checks shared by the CLI `verify`
// command and the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace hofd {

struct CheckLine {
  std::string suite;
  int criterion = 0;  // acceptance criterion number this line reports on
  std::string name;
  bool pass = false;
  double measured = 0.0;   // worst error, or mismatch count for exact checks
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  /// Negative control: build the connection side of theorem-2-2 with
  /// (-nu/n, ..., (n-1)nu/n) - rho(k) instead of + rho(k).
  bool flip_rho_sign = false;
};

/// theorem-2-2, prop-1-3, theorem-3-1, examples-a1-a2, hecke, prop-4-1,
/// indicial, ed-residual, sn-invariance, harish-chandra.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Usage error for an unknown name.
std::vector<CheckLine> run_suite(const std::string& name, const SuiteOptions& opts = {});

std::string format_check(const CheckLine& line);

}  // namespace hofd
