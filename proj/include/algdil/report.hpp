#pragma once

// Structured pass/fail records for the verification checks.
//
// JSON layout (field names are stable):
//   {
//     "meta":   { ... run parameters: field, dim, seed, max_power, trunc, ... },
//     "checks": [ { "name": str, "params": {...}, "pass": bool,
//                   "counterexample": { "inputs": ..., "expected": ..., "actual": ... } } ],
//     "pass":   bool
//   }
// "counterexample" is present exactly when "pass" is false. Checks are
// emitted sorted by name; object keys are sorted, so equal reports serialize
// to identical bytes.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace algdil {

using nlohmann::json;

struct CheckRecord {
  std::string name;
  json params = json::object();
  bool pass = true;
  std::optional<json> counterexample;

  static CheckRecord passed(std::string name, json params) {
    return {std::move(name), std::move(params), true, std::nullopt};
  }
  static CheckRecord failed(std::string name, json params, json counterexample) {
    return {std::move(name), std::move(params), false, std::move(counterexample)};
  }

  json to_json() const;
  static CheckRecord from_json(const json& j);

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  json meta = json::object();
  std::vector<CheckRecord> checks;

  bool pass() const;
  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void append(const std::vector<CheckRecord>& rs) { checks.insert(checks.end(), rs.begin(), rs.end()); }
  const CheckRecord* find(const std::string& name) const;

  json to_json() const;
  /// Throws ParseError on schema violations, including a "pass" field that
  /// disagrees with the records.
  static Report from_json(const json& j);

  std::string serialize() const;  // pretty JSON + trailing newline
  std::string render_text() const;
};

}  // namespace algdil
