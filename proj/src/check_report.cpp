#include "ftvs/check_report.hpp"

namespace ftvs {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: return "unknown";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

void CheckReport::record(double violation, std::span<const double> at,
                         std::vector<std::pair<std::string, double>> params) {
  if (violation > max_violation) {
    max_violation = violation;
    witness.assign(at.begin(), at.end());
    parameters = std::move(params);
  }
}

CheckReport& CheckReport::decide() {
  verdict = max_violation <= tolerance ? Verdict::Pass : Verdict::Fail;
  return *this;
}

double CheckReport::metric_value(std::string_view key, double fallback) const {
  for (const auto& [k, v] : metrics) {
    if (k == key) return v;
  }
  return fallback;
}

void CheckReport::append_note(std::string_view text) {
  if (!note.empty()) note += "; ";
  note += text;
}

}  // namespace ftvs
