#pragma once

#include <string>
#include <vector>

namespace rotamap {

enum class CheckStatus { Pass, Fail, Info };
std::string to_string(CheckStatus status);

struct CheckResult {
  std::string key;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

// Names accepted by run_suite.
std::vector<std::string> suite_names();

// Runs a named verification suite. Library errors inside a check are caught
// and reported as failures of that check. Throws UnknownName.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace rotamap
