#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocklab/exactlin.hpp"

namespace blocklab {

// Scenario runner: executes the verification steps S1..S12 and collects a
// machine-readable report. Steps are isolated; a failing step marks its
// checks failed and the run continues.

inline constexpr const char* kToolkitVersion = "0.1.0";

struct CheckResult {
  std::string id;
  std::string claim;
  std::string expected;
  std::string actual;
  enum class Status { pass, fail, skipped } status = Status::fail;
  std::string field_of_verification;
};

struct Report {
  std::string version = kToolkitVersion;
  std::uint32_t p = 3;
  std::vector<CheckResult> checks;

  bool overall_pass() const;
};

struct PipelineOptions {
  std::uint32_t p = 3;
  // Directory with algebra_A.quiver etc.; embedded copies are used when unset.
  std::optional<std::string> specs_dir;
};

Report run_pipeline(const PipelineOptions& options = {});

std::string render_json(const Report& report);
std::string render_text(const Report& report);

}  // namespace blocklab
