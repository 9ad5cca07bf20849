// Structured verification report emitted by every CLI command.
//
// JSON field order is fixed: command, inputs, checks[{name, status, details}],
// elapsed_ms, seed. status is one of "pass", "fail", "skipped".
#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cyhit {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skipped };

std::string status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  Json details = Json::object();
};

struct VerificationReport {
  std::string command;
  Json inputs = Json::object();
  std::vector<CheckResult> checks;
  std::uint64_t elapsed_ms = 0;
  std::uint64_t seed = 0;

  void add(std::string name, bool passed, Json details = Json::object());
  void skip(std::string name, Json details = Json::object());
  bool failed() const;
  std::size_t count(CheckStatus s) const;

  Json to_json() const;
  /// One line per check plus a totals line, for standard error.
  std::string summary() const;
};

}  // namespace cyhit
