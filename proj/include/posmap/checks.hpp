#pragma once
// The full verification suite: every closed-form claim of the library is
// re-derived numerically or exactly and reported as a named pass/fail check.
// Shared by the acceptance binary and the CLI's verify subcommand.

#include "posmap/certify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace posmap {

struct CheckOptions {
  int d_max = 6;
  int k_max = 6;
  ChainLine chain_line = ChainLine::Consistent;  // Alternate is a must-fail regression control
  std::uint64_t seed = 0;
  int restarts = 32;
  // Empty: use $POSMAP_DATA_DIR if set, else the compiled-in source path.
  std::string data_dir;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0;  // worst observed value for the criterion
  double expected = 0;  // threshold it was compared against
  std::string note;
};

// Runs all twelve checks in a fixed order; deterministic for fixed options.
[[nodiscard]] std::vector<CheckResult> run_verification_suite(const CheckOptions& opts = {});

}  // namespace posmap
