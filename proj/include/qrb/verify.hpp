#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qrb/config.hpp"

namespace qrb {

struct SuiteResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool all_passed() const;
};

/// Runs every invariant suite against the map described by cfg.
VerifyReport run_verify_suites(const RunConfig& cfg);

/// Loads the optional config file, runs the suites and prints one line per
/// suite. Returns 0 when all pass, 1 on a failed invariant, 2 on a
/// configuration error.
int run_verify(const std::optional<std::filesystem::path>& config_path, std::ostream& out);
int run_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace qrb
