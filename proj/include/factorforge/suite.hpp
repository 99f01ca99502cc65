#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace factorforge {

enum class ClaimOutcome { Pass, Fail, Budget };
std::string to_string(ClaimOutcome o);

struct ClaimInfo {
  std::string id;
  std::string statement;  // the claim being re-derived, in words
  bool quick = true;      // part of the default selection
};

struct ClaimResult {
  std::string id;
  std::string statement;
  ClaimOutcome outcome = ClaimOutcome::Fail;
  std::vector<std::string> details;
  double millis = 0;
};

const std::vector<ClaimInfo>& suite_claims();

/// Ids selected by "quick" (default tier), "all", or a comma-separated list.
/// Throws UnknownClaimId.
std::vector<std::string> select_claims(const std::string& selection);

/// Runs the claims in the given order; budget 0 means unlimited nodes per
/// search. Throws UnknownClaimId.
std::vector<ClaimResult> run_suite(const std::vector<std::string>& ids, std::uint64_t budget = 0);

nlohmann::json suite_json(const std::vector<ClaimResult>& results);
std::string suite_text(const std::vector<ClaimResult>& results);

}  // namespace factorforge
