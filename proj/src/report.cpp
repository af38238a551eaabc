#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "ftvs/scenario.hpp"

namespace ftvs {

using nlohmann::json;

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.report.passed(); });
}

RunReport run_checks(const Scenario& scenario) {
  using clock = std::chrono::steady_clock;
  RunReport out;
  out.scenario = scenario.name;
  out.configuration = scenario.resolved;
  const auto start = clock::now();
  for (const CheckSpec& spec : scenario.checks) {
    const auto t0 = clock::now();
    std::vector<CheckReport> reports;
    try {
      reports = spec.run();
    } catch (const std::exception& e) {
      // A check that cannot run is a failed check, never a configuration error.
      CheckReport r(spec.kind, 0.0);
      r.verdict = Verdict::Fail;
      r.max_violation = 1.0;
      r.note = std::string("check raised: ") + e.what();
      reports.push_back(std::move(r));
    }
    const double seconds = std::chrono::duration<double>(clock::now() - t0).count();
    for (CheckReport& r : reports) {
      std::string label = reports.size() > 1 ? spec.label + "/" + r.name : spec.label;
      out.checks.push_back(CheckOutcome{spec.kind, std::move(label), std::move(r), seconds / double(reports.size())});
    }
  }
  out.total_seconds = std::chrono::duration<double>(clock::now() - start).count();
  return out;
}

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json pairs_object(const std::vector<std::pair<std::string, double>>& pairs) {
  json o = json::object();
  for (const auto& [k, v] : pairs) o[k] = number_or_null(v);
  return o;
}

}  // namespace

json report_json(const RunReport& report, bool include_timing) {
  json checks = json::array();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const CheckOutcome& c : report.checks) {
    const CheckReport& r = c.report;
    ++counts[static_cast<int>(r.verdict)];
    json witness = json::array();
    for (double w : r.witness) witness.push_back(number_or_null(w));
    checks.push_back({{"kind", c.kind},
                      {"label", c.label},
                      {"name", r.name},
                      {"verdict", std::string(to_string(r.verdict))},
                      {"passed", r.passed()},
                      {"max_violation", number_or_null(r.max_violation)},
                      {"tolerance", r.tolerance},
                      {"witness", witness},
                      {"parameters", pairs_object(r.parameters)},
                      {"metrics", pairs_object(r.metrics)},
                      {"note", r.note}});
  }
  json doc = {{"schema", kReportSchema},
              {"tool_version", kToolVersion},
              {"scenario", report.scenario},
              {"passed", report.passed()},
              {"configuration", report.configuration},
              {"checks", checks},
              {"summary",
               {{"total", report.checks.size()},
                {"pass", counts[static_cast<int>(Verdict::Pass)]},
                {"fail", counts[static_cast<int>(Verdict::Fail)]},
                {"unknown", counts[static_cast<int>(Verdict::Unknown)]},
                {"not_applicable", counts[static_cast<int>(Verdict::NotApplicable)]}}}};
  if (include_timing) {
    json per = json::array();
    for (const CheckOutcome& c : report.checks) per.push_back({{"label", c.label}, {"seconds", c.seconds}});
    doc["timing"] = {{"total_seconds", report.total_seconds}, {"checks", per}};
  }
  return doc;
}

std::string render_json(const RunReport& report) { return report_json(report).dump(2) + "\n"; }

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  out << "scenario: " << report.scenario << "\n";
  out << "tool: ftvs " << kToolVersion << "\n\n";
  std::size_t width = 0;
  for (const CheckOutcome& c : report.checks) width = std::max(width, c.label.size());
  std::size_t passed = 0;
  for (const CheckOutcome& c : report.checks) {
    const CheckReport& r = c.report;
    if (r.passed()) ++passed;
    std::string verdict(to_string(r.verdict));
    for (char& ch : verdict) ch = char(std::toupper(static_cast<unsigned char>(ch)));
    out << std::left << std::setw(15) << verdict << std::setw(int(width) + 2) << c.label
        << "max_violation=" << r.max_violation << " tolerance=" << r.tolerance;
    if (!r.passed() && !r.witness.empty()) {
      out << " witness=(";
      for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? ", " : "") << r.witness[i];
      out << ")";
    }
    out << "\n";
    if (!r.note.empty()) out << std::string(15, ' ') << r.note << "\n";
  }
  out << "\noverall: " << (report.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << report.checks.size()
      << " checks passed)\n";
  return out.str();
}

}  // namespace ftvs
