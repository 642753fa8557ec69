#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace paircorr::cli {

struct CheckResult {
  std::string name;
  std::string description;
  bool passed = false;
  double deviation = 0.0;  // measured quantity compared against tolerance
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  nlohmann::json to_json() const;
};

// Names of the checks in execution order.
std::vector<std::string> validation_check_names();

// Runs one named check; nullopt for an unknown name.
std::optional<CheckResult> run_check(const std::string &name);

// Runs every check; a check that throws is recorded as failed with the
// exception text. progress (optional) sees each result as it completes.
ValidationReport run_validation(const std::function<void(const CheckResult &)> &progress = {});

} // namespace paircorr::cli
