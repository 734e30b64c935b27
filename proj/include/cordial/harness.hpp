#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cordial/decide.hpp"

namespace cordial {

/// One reproducible claim: what is asserted and over which instances.
struct ClaimInfo {
  std::string id;      // stable, sorts in report order
  std::string group;   // filter key, e.g. "wheel"
  std::string result;  // the theorem-level statement being re-checked
  std::string range;   // instances covered
};

struct ClaimResult {
  ClaimInfo info;
  bool pass = false;
  std::string detail;
  double runtime_ms = 0.0;
};

struct HarnessReport {
  std::vector<ClaimResult> rows;
  bool all_pass() const;
};

const std::vector<ClaimInfo>& claim_table();

/// Runs every claim whose id or group appears in `filter` (all when empty).
/// A failing or throwing claim is recorded and never stops the others.
HarnessReport run_harness(const std::vector<std::string>& filter = {}, const SearchOptions& opts = {});

void to_json(nlohmann::json& j, const HarnessReport& r);

}  // namespace cordial
