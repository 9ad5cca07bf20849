#include "cyhit/report.hpp"

#include <algorithm>
#include <sstream>

namespace cyhit {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

void VerificationReport::add(std::string name, bool passed, Json details) {
  checks.push_back({std::move(name), passed ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)});
}

void VerificationReport::skip(std::string name, Json details) {
  checks.push_back({std::move(name), CheckStatus::Skipped, std::move(details)});
}

bool VerificationReport::failed() const { return count(CheckStatus::Fail) != 0; }

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const auto& c) { return c.status == s; }));
}

Json VerificationReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["checks"] = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    e["details"] = c.details;
    j["checks"].push_back(std::move(e));
  }
  j["elapsed_ms"] = elapsed_ms;
  j["seed"] = seed;
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) os << "[" << status_name(c.status) << "] " << c.name << '\n';
  os << command << ": " << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
     << count(CheckStatus::Skipped) << " skipped (" << elapsed_ms << " ms)\n";
  return os.str();
}

}  // namespace cyhit
