#pragma once

// Named checks reproducing the tabulated and worked examples, grouped into
// suites for the verify-paper command.

#include <string>
#include <string_view>
#include <vector>

#include "e8kit/e8kill.hpp"

namespace e8kit {

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::skipped;
  std::string details;
};

/// roots, chevalley, qform, descent, e8kill, appendix.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all", in a fixed order.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite);

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_witnessed = 0;
  std::size_t skipped = 0;
};
CheckTally tally(const std::vector<CheckResult>& results);

}  // namespace e8kit
