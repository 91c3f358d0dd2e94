#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affqha/grid.hpp"

namespace affqha {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool upper = true;  // pass iff value <= bound; otherwise value >= bound
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool pass() const;
};

struct VerifyConfig {
  GridSpec grid;
};

// Grid spec with n log nodes on the same t-range; the s-axis is re-derived so that its
// nodes stay on even multiples of dt.
GridSpec with_log_nodes(const GridSpec& base, int n);

std::vector<std::string> suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyConfig& cfg);

// One line per check plus a summary line per suite; no timings, so output is reproducible.
std::string format_report(std::span<const SuiteResult> results);

}  // namespace affqha
