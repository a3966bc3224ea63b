#pragma once

#include <string>
#include <vector>

#include "fanalg/cli/config.hpp"
#include "fanalg/invariants/record.hpp"

#include "json.hpp"

namespace fanalg::cli {

enum class SuiteStatus { pass, fail, partial };
std::string to_string(SuiteStatus status);

struct SuiteReport {
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  // One line per check, for the human view.
  std::vector<std::string> lines;
  // Checks and, on failure, what failed (S-pair, nonzero evaluation, ...).
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

const std::vector<std::string>& suite_names();

// Built-in resultant index sets for (5,2), (8,4) and (9,5); empty otherwise.
std::vector<inv::ResultantSelection> embedded_resultant_selections(int p, int m);

// Throws DomainError for an unknown suite.
SuiteReport run_suite(const std::string& name, const RunConfig& config);

}  // namespace fanalg::cli
