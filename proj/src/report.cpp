#include "nilforms/report.hpp"

#include <json.hpp>

namespace nilforms {

using ordered_json = nlohmann::ordered_json;

const char* condition_status_name(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Holds: return "holds";
    case ConditionStatus::Fails: return "fails";
    case ConditionStatus::Conditional: return "conditional";
  }
  return "?";
}

std::string Report::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["manifold"] = manifold;
  j["n"] = n;
  if (validation) {
    ordered_json v;
    v["d_squared_zero"] = validation->d_squared_zero;
    v["integrable"] = validation->integrable;
    v["filtration"] = validation->filtration;
    v["ok"] = validation->ok();
    v["failures"] = validation->failures;
    j["validation"] = std::move(v);
  }
  if (abelian) j["abelian"] = *abelian;
  if (canonical_closed) j["canonical_form_closed"] = *canonical_closed;
  if (metric) j["metric"] = *metric;
  if (!conditions.empty()) {
    ordered_json list = ordered_json::array();
    for (const ConditionReport& c : conditions) {
      ordered_json e;
      e["condition"] = c.condition;
      if (c.k) e["k"] = *c.k;
      e["status"] = condition_status_name(c.status);
      e["residual"] = c.residual.str();
      ordered_json cs = ordered_json::array();
      for (const PolyScalar& p : c.constraints) cs.push_back(p.str());
      e["constraints"] = std::move(cs);
      list.push_back(std::move(e));
    }
    j["conditions"] = std::move(list);
  }
  if (!constants.empty()) {
    ordered_json list = ordered_json::array();
    for (const ConstantEntry& c : constants) {
      ordered_json e;
      e["k"] = c.k;
      e["numerator"] = c.numerator;
      e["denominator"] = c.denominator;
      if (c.value) e["value"] = *c.value;
      list.push_back(std::move(e));
    }
    j["constants"] = std::move(list);
  }
  if (!identities.empty()) {
    ordered_json list = ordered_json::array();
    for (const IdentityEntry& e : identities) {
      ordered_json o;
      o["name"] = e.name;
      if (e.k) o["k"] = *e.k;
      o["ok"] = e.ok;
      list.push_back(std::move(o));
    }
    j["identities"] = std::move(list);
  }
  if (!family.empty()) {
    ordered_json f;
    for (const auto& [key, value] : family) f[key] = value;
    j["family"] = std::move(f);
  }
  j["warnings"] = warnings;
  j["ok"] = ok;
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out;
  out += "manifold: " + (manifold.empty() ? "(unnamed)" : manifold) +
         " (n = " + std::to_string(n) + ")\n";
  if (validation) {
    out += std::string("validation: ") + (validation->ok() ? "pass" : "FAIL");
    out += std::string("  [d^2=0: ") + (validation->d_squared_zero ? "pass" : "fail");
    out += std::string(", integrable: ") + (validation->integrable ? "pass" : "fail");
    out += std::string(", filtration: ") + (validation->filtration ? "pass" : "fail") + "]\n";
    for (const std::string& f : validation->failures) out += "  - " + f + "\n";
  }
  if (abelian) out += std::string("abelian: ") + (*abelian ? "yes" : "no") + "\n";
  if (canonical_closed)
    out += std::string("canonical form closed: ") + (*canonical_closed ? "yes" : "no") + "\n";
  if (metric) out += "metric: " + *metric + "\n";
  for (const ConditionReport& c : conditions) {
    out += c.condition;
    if (c.k) out += "(k=" + std::to_string(*c.k) + ")";
    out += std::string(": ") + condition_status_name(c.status);
    if (c.status != ConditionStatus::Holds) out += "  residual: " + c.residual.str();
    out += "\n";
    for (const PolyScalar& p : c.constraints) out += "  requires: " + p.str() + " = 0\n";
  }
  for (const ConstantEntry& c : constants) {
    out += "C_" + std::to_string(c.k) + " = ";
    if (c.value) out += *c.value;
    else out += "(" + c.numerator + ") / (" + c.denominator + ")";
    out += "\n";
  }
  for (const IdentityEntry& e : identities) {
    out += e.name;
    if (e.k) out += "(k=" + std::to_string(*e.k) + ")";
    out += std::string(": ") + (e.ok ? "pass" : "fail") + "\n";
  }
  for (const auto& [key, value] : family) out += key + ": " + value + "\n";
  for (const std::string& w : warnings) out += "warning: " + w + "\n";
  out += std::string("result: ") + (ok ? "ok" : "FAIL") + "\n";
  return out;
}

std::string Report::render(const std::string& output_mode) const {
  return output_mode == "json" ? to_json() : to_text();
}

}  // namespace nilforms
