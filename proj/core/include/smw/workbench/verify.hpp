#pragma once

#include <string>
#include <vector>

#include "smw/polygon.hpp"
#include "smw/workbench/wire.hpp"

namespace smw {

struct SuiteResult {
  std::string name;
  bool passed = false;
  long checked = 0;
  long failures = 0;
  std::vector<std::string> samples;  // first few failures
  double seconds = 0.0;
};

/// orthogonality, cy-duality, closure-golden, tilt-round-trip, oracle-agreement
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Throws parameter_error for an unknown suite, unsupported_weight for w < 2.
SuiteResult run_suite(const std::string& name, const CategoryParams& p);
/// "all" expands to every suite in suite_names() order.
std::vector<SuiteResult> run_suites(const std::string& selector, const CategoryParams& p);

/// Timing is left out so that the document is byte-stable.
wire::Json to_json(const SuiteResult& r);

}  // namespace smw
