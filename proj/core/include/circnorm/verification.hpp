#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace circnorm {

struct VerifyOptions {
  int max_n = 16;  // largest dimension drawn; capped at 256
  std::uint64_t seed = 0;
  int cases = 200;  // randomized case count for the cheap suites; the
                    // estimator-heavy ones run a fraction of it
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> details;  // first few failing cases, parameters echoed
};

/// Runs every module's invariant suite against randomized inputs.
/// Deterministic for fixed options.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

}  // namespace circnorm
