#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "percoperm/bigint.hpp"

namespace percoperm::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Brute-force and formula values that `verify` cross-checks, indexed by n
/// (entry 0 unused).
struct VerificationInputs {
  int n = 0;
  std::vector<Integer> full;
  std::vector<Integer> indecomposable_full;
  std::vector<Integer> no_growth;
};

VerificationInputs gather_verification_inputs(int n);

/// Prints one PASS/FAIL line per check and returns kOk or kVerificationFailed.
int report_verification(const VerificationInputs& in, std::ostream& out);

}  // namespace percoperm::cli
