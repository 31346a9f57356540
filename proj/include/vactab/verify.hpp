#pragma once

#include <map>
#include <string>
#include <vector>

namespace vactab {

using Params = std::map<std::string, std::string>;

struct VerificationReport {
  std::string id;
  std::string params;
  std::string status;  // "pass" | "fail"
  std::string lhs, rhs;
  long elapsed_ms = 0;
  bool passed() const { return status == "pass"; }
};

// Every identity id the runner knows, sorted.
const std::vector<std::string>& identity_catalog();

// Run one entry; params override its pinned default ranges (keys: n, k, k1,
// k2, m, max-k, shape). Throws std::invalid_argument for unknown ids.
VerificationReport run_identity(const std::string& id, const Params& params = {});

// Every entry with pinned defaults, ordered by id. Entries exceeding the
// per-entry budget get a note appended to their params string.
std::vector<VerificationReport> run_all(long per_entry_budget_ms = 10000);

}  // namespace vactab
