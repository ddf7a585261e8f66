#pragma once

#include <string>
#include <vector>

namespace icher {

struct SuiteItem {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

const std::vector<std::string>& suite_names();

// Runs one named verification suite at the standard desk-scale bounds.
// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name);

}  // namespace icher
