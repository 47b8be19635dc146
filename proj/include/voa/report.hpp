#pragma once

#include <map>
#include <string>
#include <vector>

namespace voa {

// One verification record. `anchor` states the identity being checked in
// plain formula notation; `caps` records every truncation bound the check
// depended on.
struct CheckRecord {
  std::string id;
  std::string anchor;
  int k = 0;
  bool passed = false;
  std::string witness;  // empty unless the check failed or carries data
  std::map<std::string, std::string> caps;
};

struct SuiteReport {
  std::string suite;
  int k = 0;
  std::vector<CheckRecord> checks;

  bool all_passed() const {
    for (const CheckRecord& record : checks) {
      if (!record.passed) {
        return false;
      }
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t count = 0;
    for (const CheckRecord& record : checks) {
      if (!record.passed) {
        ++count;
      }
    }
    return count;
  }
};

}  // namespace voa
