#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ftvs_c.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int report_error(const char* context) {
  std::cerr << "ftvs: " << context << ": " << ftvs_last_error() << "\n";
  return kExitConfig;
}

int emit(ftvs_report* report, const std::string& format, const std::string& out_path) {
  const ftvs_format fmt = format == "text" ? FTVS_FORMAT_TEXT : FTVS_FORMAT_JSON;
  int code = ftvs_report_passed(report) ? kExitPass : kExitFail;
  if (!out_path.empty()) {
    if (ftvs_report_write(report, fmt, out_path.c_str()) != FTVS_OK) code = report_error("writing report");
  } else {
    char* text = nullptr;
    if (ftvs_report_render(report, fmt, 1, &text) != FTVS_OK) {
      code = report_error("rendering report");
    } else {
      std::fputs(text, stdout);
      ftvs_string_free(text);
    }
  }
  ftvs_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Executable checks for fuzzy topological vector spaces on discretized finite-dimensional spaces"};
  app.set_version_flag("--version", std::string("ftvs ") + ftvs_version());
  app.require_subcommand(1);

  std::string scenario_path, format = "json", out_path, demo_name;

  auto* check = app.add_subcommand("check", "Run every check in a scenario file");
  check->add_option("scenario", scenario_path, "Scenario file (JSON)")->required();
  check->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  check->add_option("--out", out_path, "Write the report here instead of standard output");

  auto* demo = app.add_subcommand("demo", "Run a built-in scenario");
  demo->add_option("name", demo_name, "Demo name (see list-checks)")->required();
  demo->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  demo->add_option("--out", out_path, "Write the report here instead of standard output");

  auto* list = app.add_subcommand("list-checks", "List check kinds and demo names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (*list) {
    std::cout << "check kinds:\n";
    std::string kinds = ftvs_check_kinds();
    for (std::size_t pos = 0, next; (next = kinds.find('\n', pos)) != std::string::npos; pos = next + 1) {
      std::cout << "  " << kinds.substr(pos, next - pos) << "\n";
    }
    std::cout << "demos:\n";
    std::string demos = ftvs_demo_names();
    for (std::size_t pos = 0, next; (next = demos.find('\n', pos)) != std::string::npos; pos = next + 1) {
      std::cout << "  " << demos.substr(pos, next - pos) << "\n";
    }
    return kExitPass;
  }

  ftvs_report* report = nullptr;
  if (*check) {
    ftvs_scenario* scenario = nullptr;
    if (ftvs_scenario_load_file(scenario_path.c_str(), &scenario) != FTVS_OK) return report_error(scenario_path.c_str());
    const ftvs_status st = ftvs_run(scenario, &report);
    ftvs_scenario_free(scenario);
    if (st != FTVS_OK) return report_error("running checks");
  } else {
    if (ftvs_demo(demo_name.c_str(), &report) != FTVS_OK) return report_error("demo");
  }
  return emit(report, format, out_path);
}
