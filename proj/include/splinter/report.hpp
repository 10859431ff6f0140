#pragma once

#include <string>

#include <json.hpp>

namespace splinter::scen {

// nlohmann's default object storage is std::map, so keys serialize sorted;
// with integers, strings and booleans only, reports are canonical bytes.
using json = nlohmann::json;

inline constexpr const char* kToolVersion = "splinter 0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Deterministic machine-readable scenario report.  Every verdict is
/// accompanied by the artifact it was computed from, and embedded
/// expectations compare computed values against pinned ones.
class Report {
public:
  Report(std::string scenario, json params);
  static Report from_machine(const std::string& bytes);

  const std::string& scenario() const { return scenario_; }

  void set_verdict(const std::string& key, json value);
  void add_artifact(const std::string& key, json value);
  // Pinned expectation: records pass/fail against the computed value.
  void expect(const std::string& statement, const json& expected, const json& computed);

  bool expectations_ok() const;
  std::string machine() const;  // canonical serialization, newline-terminated
  std::string table() const;    // human-readable rendering

  const json& doc() const { return doc_; }

private:
  explicit Report(json doc);
  std::string scenario_;
  json doc_;
};

}  // namespace splinter::scen
