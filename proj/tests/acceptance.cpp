// Runs every verification suite and prints one PASS/FAIL line per acceptance
// criterion. A criterion passes when all of its checks pass and, where a
// runtime target exists, its suites finish within it.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hofd/verify.hpp"

namespace {

struct Criterion {
  const char* title;
  double runtime_target = 0.0;  // seconds, 0 for none
  int checks = 0;
  int failed = 0;
  double seconds = 0.0;
  std::vector<std::string> failures;
};

}  // namespace

int main() {
  std::map<int, Criterion> crit = {
      {1, {"connection formula = F_D formula, n = 2, 3, 4", 60.0}},
      {2, {"Weyl sum collapses to the coset representatives"}},
      {3, {"integer nu: F = (k)_nu/(nk)_nu Phi and c-function value"}},
      {4, {"F_D forms equal the Jack polynomials (exact)", 30.0}},
      {5, {"A1 connection formula, Jacobi form, Gegenbauer value"}},
      {6, {"A2 connection formula with F1 and G2"}},
      {7, {"E_D, Delta_ij and Casimir residuals"}},
      {8, {"S_n-invariance of the degenerate F"}},
      {9, {"Dunkl commutator, Hecke, Delta_ij symbol and D_p identities (exact)", 120.0}},
      {10, {"indicial solutions and excluded nu"}},
      {11, {"Harish-Chandra coefficients and residual decay"}},
  };

  hofd::SuiteOptions opts;
  for (const auto& suite : hofd::suite_names()) {
    const auto start = std::chrono::steady_clock::now();
    const auto lines = hofd::run_suite(suite, opts);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::map<int, bool> touched;
    for (const auto& l : lines) {
      auto& c = crit.at(l.criterion);
      ++c.checks;
      if (!l.pass) {
        ++c.failed;
        c.failures.push_back(hofd::format_check(l));
      }
      touched[l.criterion] = true;
    }
    // a suite that reports on several criteria charges its time to each
    for (const auto& [id, _] : touched) crit.at(id).seconds += secs;
  }

  int failed = 0;
  for (auto& [id, c] : crit) {
    const bool slow = c.runtime_target > 0 && c.seconds > c.runtime_target;
    const bool pass = c.checks > 0 && c.failed == 0 && !slow;
    failed += !pass;
    std::printf("%s  criterion %2d  %-62s %d/%d checks  %.1f s", pass ? "PASS" : "FAIL", id,
                c.title, c.checks - c.failed, c.checks, c.seconds);
    if (c.runtime_target > 0) std::printf(" (target %.0f s)", c.runtime_target);
    std::printf("\n");
    for (const auto& f : c.failures) std::printf("      %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(crit.size()) - failed, crit.size());
  return failed == 0 ? 0 : 1;
}
