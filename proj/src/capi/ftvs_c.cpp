#include "ftvs_c.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "ftvs/scenario.hpp"

struct ftvs_scenario {
  ftvs::Scenario value;
};

struct ftvs_report {
  ftvs::RunReport value;
};

struct ftvs_set {
  ftvs::FuzzySet value;
};

namespace {

thread_local std::string last_error;

ftvs_status set_error(ftvs_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating C++ exceptions into status codes.
template <class F>
ftvs_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const nlohmann::json::exception& e) {
    return set_error(FTVS_ERR_PARSE, std::string("parse error: ") + e.what());
  } catch (const ftvs::IoError& e) {
    return set_error(FTVS_ERR_IO, e.what());
  } catch (const ftvs::ConfigError& e) {
    const std::string what = e.what();
    return set_error(what.rfind("parse error", 0) == 0 ? FTVS_ERR_PARSE : FTVS_ERR_CONFIG, what);
  } catch (const ftvs::ArgumentError& e) {
    return set_error(FTVS_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(FTVS_ERR_INTERNAL, e.what());
  }
}

ftvs_status null_argument(const char* name) { return set_error(FTVS_ERR_ARGUMENT, std::string(name) + " is NULL"); }

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += n + "\n";
  return out;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const ftvs_report* report, ftvs_format format, bool timing) {
  if (format == FTVS_FORMAT_TEXT) return ftvs::render_text(report->value);
  return ftvs::report_json(report->value, timing).dump(2) + "\n";
}

}  // namespace

extern "C" {

const char* ftvs_version(void) { return ftvs::kToolVersion; }

const char* ftvs_last_error(void) { return last_error.c_str(); }

ftvs_status ftvs_scenario_load_file(const char* path, ftvs_scenario** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new ftvs_scenario{ftvs::load_scenario(path)};
    return FTVS_OK;
  });
}

ftvs_status ftvs_scenario_load_string(const char* json_text, ftvs_scenario** out) {
  if (!json_text) return null_argument("json_text");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new ftvs_scenario{ftvs::parse_scenario_text(json_text)};
    return FTVS_OK;
  });
}

const char* ftvs_scenario_name(const ftvs_scenario* scenario) { return scenario ? scenario->value.name.c_str() : ""; }

void ftvs_scenario_free(ftvs_scenario* scenario) { delete scenario; }

ftvs_status ftvs_run(const ftvs_scenario* scenario, ftvs_report** out) {
  if (!scenario) return null_argument("scenario");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new ftvs_report{ftvs::run_checks(scenario->value)};
    return FTVS_OK;
  });
}

ftvs_status ftvs_demo(const char* name, ftvs_report** out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  const auto& names = ftvs::demo_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    return set_error(FTVS_ERR_UNKNOWN_DEMO, "unknown demo '" + std::string(name) + "'");
  }
  return guarded([&] {
    *out = new ftvs_report{ftvs::run_demo(name)};
    return FTVS_OK;
  });
}

int ftvs_report_passed(const ftvs_report* report) { return report && report->value.passed() ? 1 : 0; }

size_t ftvs_report_check_count(const ftvs_report* report) { return report ? report->value.checks.size() : 0; }

ftvs_status ftvs_report_render(const ftvs_report* report, ftvs_format format, int include_timing, char** out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = duplicate(render(report, format, include_timing != 0));
    return *out ? FTVS_OK : set_error(FTVS_ERR_INTERNAL, "out of memory");
  });
}

ftvs_status ftvs_report_write(const ftvs_report* report, ftvs_format format, const char* path) {
  if (!report) return null_argument("report");
  if (!path) return null_argument("path");
  return guarded([&] {
    const std::string text = render(report, format, true);
    std::ofstream file(path, std::ios::binary);
    if (!file) return set_error(FTVS_ERR_IO, "cannot write report to '" + std::string(path) + "'");
    file << text;
    file.close();
    if (!file) return set_error(FTVS_ERR_IO, "error while writing '" + std::string(path) + "'");
    return FTVS_OK;
  });
}

void ftvs_report_free(ftvs_report* report) { delete report; }

void ftvs_string_free(char* text) { std::free(text); }

const char* ftvs_check_kinds(void) {
  static const std::string kinds = joined(ftvs::check_kinds());
  return kinds.c_str();
}

const char* ftvs_demo_names(void) {
  static const std::string names = joined(ftvs::demo_names());
  return names.c_str();
}

ftvs_status ftvs_set_parse(const char* domain_json, const char* expression_json, ftvs_set** out) {
  if (!domain_json) return null_argument("domain_json");
  if (!expression_json) return null_argument("expression_json");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto domain = nlohmann::json::parse(domain_json);
    const auto expr = nlohmann::json::parse(expression_json);
    *out = new ftvs_set{ftvs::parse_set_expression(domain, expr)};
    return FTVS_OK;
  });
}

size_t ftvs_set_dimension(const ftvs_set* set) { return set ? set->value.domain().dimension() : 0; }

ftvs_status ftvs_set_eval(const ftvs_set* set, const double* x, size_t n, double* out) {
  if (!set) return null_argument("set");
  if (!x && n > 0) return null_argument("x");
  if (!out) return null_argument("out");
  if (n != set->value.domain().dimension()) {
    return set_error(FTVS_ERR_ARGUMENT, "point has dimension " + std::to_string(n) + ", set has " +
                                            std::to_string(set->value.domain().dimension()));
  }
  return guarded([&] {
    *out = set->value(std::span<const double>(x, n));
    return FTVS_OK;
  });
}

void ftvs_set_free(ftvs_set* set) { delete set; }

}  // extern "C"
