#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ffhyper::cli {

struct SuiteOptions {
  /// Substring filters on "group.name"; empty runs everything.
  std::vector<std::string> only;
  unsigned workers = 0;
};

struct SuiteCheck {
  std::string name;
  std::string group;
};

std::vector<SuiteCheck> suite_checks();

/// {schema, pass, checks: [{name, group, pass, seconds, records: [...]}]}
nlohmann::json run_suite(const SuiteOptions& options);

}  // namespace ffhyper::cli
