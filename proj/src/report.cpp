#include "algdil/report.hpp"

#include <algorithm>
#include <sstream>

#include "algdil/errors.hpp"

namespace algdil {

json CheckRecord::to_json() const {
  json j = {{"name", name}, {"params", params}, {"pass", pass}};
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

CheckRecord CheckRecord::from_json(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("pass") ||
      !j["name"].is_string() || !j["pass"].is_boolean()) {
    throw ParseError("check record needs string \"name\" and boolean \"pass\"");
  }
  CheckRecord r;
  r.name = j["name"].get<std::string>();
  r.pass = j["pass"].get<bool>();
  r.params = j.value("params", json::object());
  if (j.contains("counterexample")) r.counterexample = j["counterexample"];
  if (r.pass == r.counterexample.has_value()) {
    throw ParseError("check \"" + r.name + "\": counterexample must be present iff the check failed");
  }
  return r;
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

const CheckRecord* Report::find(const std::string& name) const {
  for (const auto& r : checks) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

json Report::to_json() const {
  std::vector<const CheckRecord*> sorted;
  for (const auto& r : checks) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckRecord* a, const CheckRecord* b) { return a->name < b->name; });
  json arr = json::array();
  for (const auto* r : sorted) arr.push_back(r->to_json());
  return {{"meta", meta}, {"checks", std::move(arr)}, {"pass", pass()}};
}

Report Report::from_json(const json& j) {
  if (!j.is_object() || !j.contains("checks") || !j["checks"].is_array() || !j.contains("pass") ||
      !j["pass"].is_boolean()) {
    throw ParseError("report needs \"checks\" array and boolean \"pass\"");
  }
  Report r;
  r.meta = j.value("meta", json::object());
  for (const auto& c : j["checks"]) r.checks.push_back(CheckRecord::from_json(c));
  if (r.pass() != j["pass"].get<bool>()) {
    throw ParseError("report \"pass\" disagrees with its check records");
  }
  return r;
}

std::string Report::serialize() const { return to_json().dump(2) + "\n"; }

std::string Report::render_text() const {
  std::ostringstream out;
  out << "overall: " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& [key, value] : meta.items()) out << "  " << key << " = " << value.dump() << "\n";
  const json doc = to_json();
  for (const auto& c : doc["checks"]) {
    out << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>() << "  "
        << c["params"].dump() << "\n";
    if (c.contains("counterexample")) out << "       counterexample: " << c["counterexample"].dump() << "\n";
  }
  return out.str();
}

}  // namespace algdil
