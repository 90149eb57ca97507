#pragma once

// Check records, findings and the JSON report.

#include <string>
#include <vector>

#include <json.hpp>

namespace tama {

struct CheckRecord {
  std::string suite;
  std::string check;
  std::string anchor;  // the identity or statement being verified
  std::string status;  // "pass", "fail" or "skipped"
  long long elapsed_ms = 0;
  std::string witness;  // first nonvanishing term on failure, or the reason for skipping
};

/// Informational result that is not a pass/fail check (typography readings, tables, verdicts).
struct Finding {
  std::string suite;
  std::string topic;
  nlohmann::ordered_json detail;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

inline Summary summarize(const std::vector<CheckRecord>& checks) {
  Summary s;
  for (const auto& c : checks) {
    if (c.status == "pass")
      ++s.pass;
    else if (c.status == "fail")
      ++s.fail;
    else
      ++s.skipped;
  }
  return s;
}

inline constexpr int kSchemaVersion = 1;

inline nlohmann::ordered_json report_json(const nlohmann::ordered_json& config, const std::vector<CheckRecord>& checks,
                                          const std::vector<Finding>& findings) {
  nlohmann::ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["config"] = config;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["suite"] = c.suite;
    j["check"] = c.check;
    j["anchor"] = c.anchor;
    j["status"] = c.status;
    j["elapsed_ms"] = c.elapsed_ms;
    j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  Summary s = summarize(checks);
  out["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}, {"total", checks.size()}};
  auto fs = nlohmann::ordered_json::array();
  for (const auto& f : findings) fs.push_back({{"suite", f.suite}, {"topic", f.topic}, {"detail", f.detail}});
  out["findings"] = std::move(fs);
  return out;
}

}  // namespace tama
