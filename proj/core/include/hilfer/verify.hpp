#pragma once

// Self-check suite: every operator identity, transform identity, solver
// cross-validation and Gronwall reduction the library relies on, evaluated
// both ways and compared against a tolerance.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilfer {

struct VerifyOptions {
  std::vector<std::string> only;            // group names; empty runs all
  std::vector<double> ys{1.5, 2.0, 3.0};    // Laplace evaluation points
  std::optional<double> tol;                // overrides every check's tolerance
  std::uint64_t seed = 20240917;
  bool mutate_kernel = false;               // shift the sum kernel lag in composition left sides
};

struct CheckResult {
  std::string group;
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> results;

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] std::size_t failures() const;
};

/// Group names in run order.
[[nodiscard]] const std::vector<std::string>& verify_groups();

/// Throws std::invalid_argument for an unknown group name or y <= 0.5.
[[nodiscard]] VerifyReport run_verification(const VerifyOptions& opts = {});

}  // namespace hilfer
