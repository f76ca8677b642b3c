#pragma once

#include <string>
#include <vector>

#include "potentials.hpp"

namespace rxpot {

// One measured quantity compared against its tolerance; pass iff
// value <= tol (values are nonnegative deviation magnitudes).
struct CheckResult {
  std::string name;
  double value;
  double tol;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  double A, B;
  Path path;
  std::vector<CheckResult> checks;
  bool pass;  // conjunction of all checks
};

// Known suites: partner, intertwine, ssusy, ortho, pt-polefree, all.
std::vector<std::string> suite_names();

// Runs the named invariant suite at the given parameters.  Throws
// std::invalid_argument for an unknown suite or inadmissible parameters.
SuiteReport run_suite(const std::string& suite, double A, double B, Path path);

}  // namespace rxpot
