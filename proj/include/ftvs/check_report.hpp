#ifndef FTVS_CHECK_REPORT_HPP
#define FTVS_CHECK_REPORT_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ftvs/domain.hpp"

namespace ftvs {

enum class Verdict { Pass, Fail, Unknown, NotApplicable };

std::string_view to_string(Verdict v);

/// Outcome of one checker run. For quantitative checks the verdict is Pass
/// exactly when max_violation <= tolerance; Unknown and NotApplicable are
/// reserved for checks that cannot decide (lsc) or whose precondition fails.
struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::Pass;
  double max_violation = 0.0;
  double tolerance = 0.0;
  Point witness;
  std::vector<std::pair<std::string, double>> parameters;
  std::vector<std::pair<std::string, double>> metrics;
  std::string note;

  CheckReport() = default;
  CheckReport(std::string name, double tolerance) : name(std::move(name)), tolerance(tolerance) {}

  bool passed() const { return verdict == Verdict::Pass; }

  /// Folds a candidate violation in; keeps the witness of the worst one.
  void record(double violation, std::span<const double> at = {},
              std::vector<std::pair<std::string, double>> params = {});

  /// Sets the verdict from max_violation and tolerance.
  CheckReport& decide();

  void metric(std::string key, double value) { metrics.emplace_back(std::move(key), value); }
  double metric_value(std::string_view key, double fallback = 0.0) const;
  void append_note(std::string_view text);
};

}  // namespace ftvs

#endif  // FTVS_CHECK_REPORT_HPP
