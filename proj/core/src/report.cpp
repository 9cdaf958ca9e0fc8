#include "omt/report.hpp"

#include <sstream>

#include <json.hpp>

namespace omt {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::OneSided: return "one-sided";
  }
  return "unknown";
}

std::string Witness::summary() const {
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += ", ";
    out += key + " = " + value;
  }
  return out;
}

Verdict VerifyReport::verdict() const {
  bool any_pass = false, any_one_sided = false;
  for (const auto& c : checks) {
    switch (c.verdict) {
      case Verdict::Fail: return Verdict::Fail;
      case Verdict::OneSided: any_one_sided = true; break;
      case Verdict::Pass: any_pass = true; break;
      case Verdict::Skipped: break;
    }
  }
  if (any_one_sided) return Verdict::OneSided;
  return any_pass ? Verdict::Pass : Verdict::Skipped;
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.verdict == Verdict::Fail) return &c;
  }
  return nullptr;
}

const CheckResult* VerifyReport::find(std::string_view check_name) const {
  for (const auto& c : checks) {
    if (c.name == check_name) return &c;
  }
  return nullptr;
}

namespace {

std::string mode_of(const CheckResult& c) {
  if (c.verdict == Verdict::Skipped) return "-";
  return c.exhaustive ? "exhaustive" : "sampled";
}

}  // namespace

std::string render_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " [" << report.instance << "]\n";
  for (const auto& c : report.checks) {
    std::string tag(to_string(c.verdict));
    tag.resize(10, ' ');
    out << "  " << tag << c.name;
    if (!c.statement.empty() && !c.name.ends_with(c.statement)) out << "  " << c.statement;
    if (c.verdict != Verdict::Skipped) {
      out << "  [" << mode_of(c) << ", " << c.cases << (c.cases == 1 ? " case]" : " cases]");
    }
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
    if (c.witness) out << "            witness: " << c.witness->summary() << '\n';
  }
  out << "verdict " << to_string(report.verdict()) << '\n';
  return out.str();
}

std::string render_json_lines(const VerifyReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["instance"] = report.instance;
    j["check"] = c.name;
    if (!c.statement.empty()) j["statement"] = c.statement;
    j["verdict"] = std::string(to_string(c.verdict));
    j["mode"] = mode_of(c);
    j["cases"] = c.cases;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.witness) {
      nlohmann::ordered_json w = nlohmann::ordered_json::object();
      for (const auto& [key, value] : c.witness->fields) w[key] = value;
      j["witness"] = std::move(w);
    }
    out += j.dump();
    out += '\n';
  }
  nlohmann::ordered_json summary;
  summary["suite"] = report.suite;
  summary["instance"] = report.instance;
  summary["verdict"] = std::string(to_string(report.verdict()));
  out += summary.dump();
  out += '\n';
  return out;
}

}  // namespace omt
