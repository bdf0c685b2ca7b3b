#include "mh/report.hpp"

#include <algorithm>

namespace mh {

bool all_pass(const Report& report) {
  return std::all_of(report.begin(), report.end(), [](const CheckResult& r) { return r.pass; });
}

nlohmann::json to_json(const Report& report) {
  auto out = nlohmann::json::array();
  for (const auto& r : report) {
    nlohmann::json entry{{"check", r.check}, {"params", r.params}, {"verdict", r.pass ? "pass" : "fail"}};
    if (r.witness) entry["witness"] = *r.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

void append(Report& report, const Report& more) { report.insert(report.end(), more.begin(), more.end()); }

}  // namespace mh
