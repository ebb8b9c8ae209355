#ifndef LNLCAT_REPORT_HPP
#define LNLCAT_REPORT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace lnlcat {

/// One violated law or structural defect, with a human-readable witness.
struct Finding {
  enum class Kind { Structural, Law };
  Kind kind = Kind::Law;
  std::string law;      // dotted id, e.g. "fincat.assoc"
  std::string witness;  // rendering of the failing instance
};

/// Result of a validation or law sweep. Empty findings means the check
/// passed. `truncated` is set whenever an enumeration hit its cap, so a
/// clean report over a truncated sweep is never silently mistaken for a
/// complete one.
class Report {
 public:
  std::vector<Finding> findings;
  bool truncated = false;
  std::map<std::string, std::string> meta;  // sweep bounds etc.

  bool ok() const { return findings.empty(); }
  bool has_structural() const;

  void law(const std::string& id, const std::string& witness);
  void structural(const std::string& id, const std::string& witness);
  void check(bool cond, const std::string& id, const std::string& witness) {
    if (!cond) law(id, witness);
  }
  void merge(const Report& other);

  nlohmann::json to_json() const;
  std::string summary() const;  // first few findings, for exception messages
};

/// Thrown when an operation's preconditions fail (invalid cocone, algebra
/// that does not satisfy its laws, ...). Carries the validation report.
class Rejected : public std::runtime_error {
 public:
  Rejected(std::string what, Report report);
  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace lnlcat

#endif
