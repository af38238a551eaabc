#ifndef FTVS_SCENARIO_HPP
#define FTVS_SCENARIO_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftvs/check_report.hpp"
#include "ftvs/fuzzy_real.hpp"
#include "ftvs/fuzzy_set.hpp"
#include "ftvs/weak.hpp"

namespace ftvs {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "ftvs-report/1";

/// Scenario file problems: malformed JSON, schema violations (the message
/// starts with the offending field path) and unresolved names.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario;

/// One requested check, validated at load time. `run` may produce several
/// reports (the Katsaras axioms yield four).
struct CheckSpec {
  std::string kind;
  std::string label;
  std::function<std::vector<CheckReport>()> run;
};

struct Scenario {
  std::string name;
  Domain space;
  Domain scalar;
  std::map<std::string, Domain> domains;
  std::optional<FelbinNorm> norm;
  std::map<std::string, FuzzySet> sets;
  std::vector<LinearFunctional> functionals;
  std::map<std::string, std::vector<Point>> sequences;
  std::vector<CheckSpec> checks;
  /// The input with every default filled in, echoed into reports.
  nlohmann::json resolved;
};

Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Parses a single set expression on `domain` (no named references).
FuzzySet parse_set_expression(const nlohmann::json& domain_spec, const nlohmann::json& expression);

struct CheckOutcome {
  std::string kind;
  std::string label;
  CheckReport report;
  double seconds = 0.0;
};

struct RunReport {
  std::string scenario;
  std::vector<CheckOutcome> checks;
  nlohmann::json configuration;
  double total_seconds = 0.0;

  bool passed() const;
};

RunReport run_checks(const Scenario& scenario);

const std::vector<std::string>& check_kinds();
const std::vector<std::string>& demo_names();

/// Built-in scenarios; throws ConfigError for an unknown name.
nlohmann::json demo_scenario(const std::string& name);
RunReport run_demo(const std::string& name);

/// Stable-keyed report. Timing lives under the top-level "timing" key only.
nlohmann::json report_json(const RunReport& report, bool include_timing = true);
std::string render_json(const RunReport& report);
std::string render_text(const RunReport& report);

}  // namespace ftvs

#endif  // FTVS_SCENARIO_HPP
