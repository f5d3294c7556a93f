#pragma once

// Verification suites shared by the CLI `verify` command, the acceptance
// binary and the Python bindings. Each check is a named pass/fail verdict with
// a human-readable detail; nothing here throws for a failed comparison.

#include <string>
#include <string_view>
#include <vector>

#include "vincular/enumeration.hpp"
#include "vincular/pattern.hpp"

namespace vincular {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteOptions {
  int n_max = 8;
  int k_max = 4;
  /// Range of the second census, used to separate classes that the main
  /// range cannot tell apart. Skipped when it does not enlarge the main range.
  int census_n_extended = 9;
  int census_k_extended = 5;
  /// Truncation order for series checks.
  int order = 10;
  /// Largest k for the closed-form and dual-route comparisons.
  int series_k_max = 5;
  Guardrail guardrail = Guardrail::from_env();
};

/// A listed group of patterns claimed to be Wilf-equivalent.
using PatternGroup = std::vector<std::string>;

/// The non-trivial (3,1) and (2,2) groups, up to symmetry.
const std::vector<PatternGroup>& listed_groups_3_1();
const std::vector<PatternGroup>& listed_groups_2_2();

/// Each function covers one acceptance criterion, numbered 1 to 7.
std::vector<CheckResult> worked_example_checks();
std::vector<CheckResult> bijection_property_checks(const SuiteOptions& o = {});
std::vector<CheckResult> classification_checks(const SuiteOptions& o = {});
std::vector<CheckResult> equivalence_checks(const SuiteOptions& o = {});
std::vector<CheckResult> gf_exactness_checks(const SuiteOptions& o = {});
std::vector<CheckResult> dual_route_checks(const SuiteOptions& o = {});
std::vector<CheckResult> invariant_checks(const SuiteOptions& o = {});

/// Checks for criterion 1..7; throws ValidationError otherwise.
std::vector<CheckResult> criterion_checks(int criterion, const SuiteOptions& o = {});
std::string criterion_title(int criterion);

/// "bijections" = 1, 2; "classification" = 3, 4; "genfun" = 5, 6;
/// "invariants" = 7; "all" = 1..7.
std::vector<int> suite_criteria(std::string_view suite);
std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& o = {});

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace vincular
