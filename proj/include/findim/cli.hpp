#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "findim/report.hpp"

namespace findim {

struct RunOptions {
  std::optional<Field> field;
  std::optional<int> cutoff;  // generator budget of the resolution engine
  std::optional<std::pair<int, int>> window;
  int seed = 0;
  std::string filter;

  Field field_or_default() const { return field.value_or(Field::rationals()); }
  std::pair<int, int> window_or_default() const { return window.value_or(std::pair<int, int>{-8, 8}); }
  json echo() const;
};

/// "lo:hi" with lo <= hi.
std::pair<int, int> parse_window(const std::string& text);

/// Parses JSON text; syntax errors are InputErrors carrying line and column.
json parse_scenario_text(const std::string& text, const std::string& source);
/// Declarations are built first (InputError on any invalid one), then queries
/// run in declaration order. Options in the file are overridden by `opt`.
VerificationReport run_scenario(const json& scenario, const RunOptions& opt);
VerificationReport run_scenario_file(const std::string& path, const RunOptions& opt);

struct SuiteCheck {
  std::string id;
  std::string anchor;
  std::string description;
};

std::vector<SuiteCheck> builtin_checks();
/// Checks whose id contains opt.filter, in suite order.
VerificationReport verify_builtin_suite(const RunOptions& opt);
/// Anchor, description and certificate of one built-in check.
std::string explain(const std::string& id, const RunOptions& opt);

}  // namespace findim
