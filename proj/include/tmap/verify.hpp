#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tmap {

struct Check {
  /// Slash-separated path, e.g. "reference_box/slope"; the first segment names the property.
  std::string name;
  bool passed = false;
  /// Deterministic summary of what was measured (no timings).
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  /// Sorted by name.
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const;
  /// {"checks": [{"detail","name","passed"}...], "passed", "suite"} with a final newline.
  [[nodiscard]] std::string to_json() const;
};

/// formula2, lemma41, lemma44, extension, sdap, examples
const std::vector<std::string>& suite_names();

/// Runs one property suite with fixed seeds. Throws InputError for an unknown name.
SuiteReport run_suite(std::string_view name);

}  // namespace tmap
