#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mh {

struct CheckResult {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  std::optional<std::string> witness;
};

using Report = std::vector<CheckResult>;

bool all_pass(const Report& report);
/// [{check, params, verdict: "pass" | "fail", witness?}]
nlohmann::json to_json(const Report& report);
void append(Report& report, const Report& more);

}  // namespace mh
