#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lorentz/special.hpp"

namespace lorentz {

struct Check {
  std::string name;
  bool passed = false;
  double value = 0;      // residual, deviation or failure count
  double tolerance = 0;
  std::string detail;
  int criterion = 0;        // acceptance criterion number, 0 when none
  bool informational = false;  // reported only, never fails the suite
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  nlohmann::json extra = nlohmann::json::object();
  bool passed() const;
};

struct SuiteOptions {
  // Replaces every pinned tolerance when set.
  std::optional<double> tol;
  std::string chain = "dirac";
  double r0 = 0.5, r1 = 60.0;
  int steps = 10000;
  int order_steps = 400;
  std::optional<cplx> kappa;
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

SuiteReport suite_commutators(const SuiteOptions& opts = {});
SuiteReport suite_addition(const SuiteOptions& opts = {});
SuiteReport suite_grouplaw(const SuiteOptions& opts = {});
SuiteReport suite_cg(const SuiteOptions& opts = {});
SuiteReport suite_clifford(const SuiteOptions& opts = {});
SuiteReport suite_schur(const SuiteOptions& opts = {});
SuiteReport suite_gy(const SuiteOptions& opts = {});
SuiteReport suite_radial(const SuiteOptions& opts = {});

}  // namespace lorentz
