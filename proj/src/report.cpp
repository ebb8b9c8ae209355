#include "lnlcat/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lnlcat {

bool Report::has_structural() const {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.kind == Finding::Kind::Structural; });
}

void Report::law(const std::string& id, const std::string& witness) {
  findings.push_back({Finding::Kind::Law, id, witness});
}

void Report::structural(const std::string& id, const std::string& witness) {
  findings.push_back({Finding::Kind::Structural, id, witness});
}

void Report::merge(const Report& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  truncated = truncated || other.truncated;
  for (const auto& [k, v] : other.meta) meta.emplace(k, v);
}

nlohmann::json Report::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const Finding& f : findings) {
    items.push_back({{"kind", f.kind == Finding::Kind::Structural ? "structural" : "law"},
                     {"law", f.law},
                     {"witness", f.witness}});
  }
  nlohmann::json sweep = nlohmann::json::object();
  for (const auto& [k, v] : meta) sweep[k] = v;
  sweep["truncated"] = truncated;
  return {{"findings", items}, {"sweep", sweep}};
}

std::string Report::summary() const {
  std::ostringstream out;
  out << findings.size() << " finding(s)";
  for (std::size_t i = 0; i < findings.size() && i < 3; ++i)
    out << "; " << findings[i].law << " at " << findings[i].witness;
  if (findings.size() > 3) out << "; ...";
  return out.str();
}

Rejected::Rejected(std::string what, Report report)
    : std::runtime_error(what + ": " + report.summary()), report_(std::move(report)) {}

}  // namespace lnlcat
