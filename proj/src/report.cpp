#include "splinter/report.hpp"

#include <sstream>

#include "splinter/error.hpp"

namespace splinter::scen {

Report::Report(std::string scenario, json params) : scenario_(std::move(scenario)) {
  doc_["artifacts"] = json::object();
  doc_["expectations"] = json::array();
  doc_["params"] = std::move(params);
  doc_["scenario"] = scenario_;
  doc_["schema"] = kSchemaVersion;
  doc_["tool"] = kToolVersion;
  doc_["verdicts"] = json::object();
}

Report::Report(json doc) : doc_(std::move(doc)) {
  if (!doc_.contains("scenario") || !doc_["scenario"].is_string())
    fail(Errc::Validation, "malformed report: missing scenario field");
  scenario_ = doc_["scenario"].get<std::string>();
}

Report Report::from_machine(const std::string& bytes) {
  json doc = json::parse(bytes, nullptr, false);
  if (doc.is_discarded()) fail(Errc::Validation, "malformed report bytes");
  return Report(std::move(doc));
}

void Report::set_verdict(const std::string& key, json value) { doc_["verdicts"][key] = std::move(value); }

void Report::add_artifact(const std::string& key, json value) { doc_["artifacts"][key] = std::move(value); }

void Report::expect(const std::string& statement, const json& expected, const json& computed) {
  json e;
  e["computed"] = computed;
  e["expected"] = expected;
  e["ok"] = (expected == computed);
  e["statement"] = statement;
  doc_["expectations"].push_back(std::move(e));
}

bool Report::expectations_ok() const {
  for (const auto& e : doc_["expectations"])
    if (!e.value("ok", false)) return false;
  return true;
}

std::string Report::machine() const { return doc_.dump(2) + "\n"; }

namespace {

void render_value(std::ostringstream& os, const json& v, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.value().is_primitive()) {
        os << pad << it.key() << ": " << it.value().dump() << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render_value(os, it.value(), indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_primitive())
        os << pad << "- " << item.dump() << "\n";
      else {
        os << pad << "-\n";
        render_value(os, item, indent + 2);
      }
    }
  } else {
    os << pad << v.dump() << "\n";
  }
}

}  // namespace

std::string Report::table() const {
  std::ostringstream os;
  os << "scenario: " << scenario_ << "\n";
  os << "params:\n";
  render_value(os, doc_["params"], 2);
  os << "verdicts:\n";
  render_value(os, doc_["verdicts"], 2);
  if (!doc_["expectations"].empty()) {
    os << "expectations:\n";
    for (const auto& e : doc_["expectations"]) {
      os << "  [" << (e.value("ok", false) ? "ok" : "MISMATCH") << "] " << e["statement"].get<std::string>()
         << " (expected " << e["expected"].dump() << ", computed " << e["computed"].dump() << ")\n";
    }
  }
  os << "artifacts:\n";
  render_value(os, doc_["artifacts"], 2);
  return os.str();
}

}  // namespace splinter::scen
