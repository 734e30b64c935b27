// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cordial/harness.hpp"

int main() {
  using cordial::ClaimResult;
  const std::vector<std::vector<std::string>> criteria = {
      {"c01-tournaments"},     {"c02-five-tournament"},
      {"c03-symmetry"},        {"c04-rim-parity"},
      {"c05-wheel"},           {"c06a-cycle-out-wheel", "c06b-cycle-out-fan"},
      {"c07-fan"},             {"c08-parallel-edges"},
      {"c09a-extremal-n6", "c09b-extremal-n7"},
      {"c10-oracle"},          {"c11-quasigroup"},
      {"c12-non-closure"},
  };

  const cordial::HarnessReport report = cordial::run_harness();
  std::map<std::string, const ClaimResult*> by_id;
  for (const auto& row : report.rows) by_id[row.info.id] = &row;

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool pass = true;
    std::string detail;
    for (const auto& id : criteria[i]) {
      const auto it = by_id.find(id);
      const bool ok = it != by_id.end() && it->second->pass;
      pass = pass && ok;
      detail += (detail.empty() ? "" : " || ") + id + ": " +
                (it == by_id.end() ? std::string("missing") : it->second->detail);
    }
    failed += pass ? 0 : 1;
    std::printf("criterion %2zu: %s  %s\n", i + 1, pass ? "PASS" : "FAIL", detail.c_str());
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
