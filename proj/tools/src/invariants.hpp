#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncp/code.hpp"

namespace ncp::cli {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::size_t checked = 0;  // instances examined
  std::string detail;       // first failure or reason for skipping
};

/// Every structural property that can be checked from a single code: trunk
/// enumeration, completion, covered and covering codes, pullback,
/// morphism identities, and the intersection-complete suite when it applies.
std::vector<CheckResult> verify_code(const Code& code);

std::string to_string(CheckStatus s);

}  // namespace ncp::cli
