// Copyright 2026 The safety_envelope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// safety_envelope command-line front end.
//
// Exit status: 0 success, 1 a verdict failed or a scenario collided,
// 2 usage or configuration error.

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "safety_envelope/analysis.hpp"
#include "safety_envelope/config.hpp"
#include "safety_envelope/regulation.hpp"
#include "safety_envelope/scenario_io.hpp"
#include "safety_envelope/simulator.hpp"

namespace fs = std::filesystem;
namespace se = safety_envelope;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

/// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct CheckArgs
{
  std::string rule;
  std::optional<double> distance;
  std::optional<std::string> vr;
  std::optional<std::string> vf;
  std::optional<std::string> v;
  std::optional<double> intrusion;
  std::optional<double> visible_for;
  bool exact{false};
};

struct SweepArgs
{
  std::string kind;
  std::optional<double> beta;
  std::optional<double> beta_min;
  std::optional<double> rho;
  std::optional<double> ttc_threshold;
  std::optional<double> cutin_a;
  std::optional<double> cutin_tau;
  std::optional<double> cutin_tau_reaction;
  std::optional<std::size_t> steps;
  std::string out;
  std::string summary;
};

template <class T>
const T & need(const std::optional<T> & value, const char * flag, const std::string & rule)
{
  if (!value) {
    throw UsageError(fmt::format("rule {} needs {}", rule, flag));
  }
  return *value;
}

se::Speed speed_flag(const std::optional<std::string> & text, const char * flag, const std::string & rule)
{
  return se::Speed(se::parse_speed_flag(need(text, flag, rule)));
}

se::RegVerdict evaluate_rule(const CheckArgs & a, const se::RegulationParams & reg)
{
  using namespace se::rule_id;
  const std::string & r = a.rule;
  if (r == kLcpEndTtc) {
    return se::lcp_end_check(
      se::Distance(need(a.distance, "--distance", r)), speed_flag(a.vr, "--vr", r), speed_flag(a.vf, "--vf", r), reg);
  }
  if (r == kLcpBeginThw) {
    return se::lcp_begin_check(
      se::Distance(need(a.distance, "--distance", r)), speed_flag(a.vr, "--vr", r), speed_flag(a.vf, "--vf", r), reg);
  }
  if (r == kIntersectionPrivilegedTtc) {
    return se::intersection_privileged_check(
      se::Distance(need(a.distance, "--distance", r)), speed_flag(a.v, "--v", r), reg);
  }
  if (r == kCutinGate) {
    return se::cutin_gate_check(
      se::Distance(need(a.intrusion, "--intrusion", r)), se::Duration(need(a.visible_for, "--visible-for", r)), reg);
  }
  if (r == kCutinTtc) {
    return se::cutin_check(
      se::Distance(need(a.distance, "--distance", r)), speed_flag(a.vr, "--vr", r), speed_flag(a.vf, "--vf", r),
      se::Distance(need(a.intrusion, "--intrusion", r)), se::Duration(need(a.visible_for, "--visible-for", r)), reg);
  }
  throw UsageError("unknown rule '" + r + "'");
}

int run_check(const CheckArgs & a, const se::Config & cfg)
{
  const se::RegVerdict v = evaluate_rule(a, cfg.regulation);
  const se::DisplayOptions & disp = cfg.display;
  const auto shown = [&](double x) { return se::round_display(x, disp.decimals, disp.rounding); };

  // Flag inputs carry display precision, so by default the comparison is made
  // on displayed values as well. --exact compares the raw numbers.
  bool passed = v.passed;
  if (!a.exact && v.applicable && v.rule_id != se::rule_id::kCutinGate && std::isfinite(v.threshold)) {
    passed = shown(v.measured) >= shown(v.threshold);
  }
  std::string note = v.note;
  if (passed != v.passed) {
    // Rounding decided the outcome; say so next to the raw margin.
    note += fmt::format("{}{} at {} decimal(s), use --exact for raw values", note.empty() ? "" : "; ",
                        passed ? "passes" : "fails", disp.decimals);
  }

  const auto num = [&](double x) {
    return std::isfinite(x) ? se::format_display(x, std::max(disp.decimals, 3), disp.rounding) : std::string("inf");
  };
  std::cout << fmt::format(
    "{}: {}{} measured={} {} threshold={} {} margin={}{}\n", v.rule_id, passed ? "PASS" : "FAIL",
    v.applicable ? "" : " (not applicable)", num(v.measured), v.unit, num(v.threshold), v.unit, num(v.margin),
    note.empty() ? "" : " [" + note + "]");
  return passed ? kExitOk : kExitFailed;
}

void write_file(const fs::path & path, const std::string & content)
{
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << content;
}

int run_simulate(const std::string & scenario_path, const std::string & out_dir)
{
  const se::Scenario sc = se::load_scenario(scenario_path);
  const se::SimOutcome outcome = se::run(sc);
  const std::string summary = se::outcome_to_json(sc, outcome);
  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    std::ostringstream trace;
    std::ostringstream pairs;
    se::write_trace_csv(outcome, trace);
    se::write_pair_csv(outcome, pairs);
    write_file(dir / "trace.csv", trace.str());
    write_file(dir / "pairs.csv", pairs.str());
    write_file(dir / "outcome.json", summary);
  }
  std::cout << summary;
  return outcome.collided ? kExitFailed : kExitOk;
}

int run_sweep(const SweepArgs & a, const se::Config & cfg)
{
  const auto kind = se::parse_sweep_kind(a.kind);
  if (!kind) {
    throw UsageError(
      "unknown sweep kind '" + a.kind + "' (lcp-distance, dynamic-ttc, intersection-ttc, cutin-ttc)");
  }
  se::SweepParams params = se::default_sweep_params(*kind);
  params.regulation = cfg.regulation;
  try {
    if (a.beta) {
      params.beta_lon_max = *a.beta;
    }
    if (a.beta_min) {
      params.beta_lon_min = *a.beta_min;
    }
    if (a.rho) {
      params.rho = *a.rho;
    }
    if (a.ttc_threshold) {
      params.regulation.ttc_threshold = se::Duration(*a.ttc_threshold);
    }
    if (a.cutin_a) {
      params.regulation.cutin_a = se::Acceleration(*a.cutin_a);
    }
    if (a.cutin_tau) {
      params.regulation.cutin_tau = se::Duration(*a.cutin_tau);
    }
    if (a.cutin_tau_reaction) {
      params.regulation.cutin_tau_reaction = se::Duration(*a.cutin_tau_reaction);
    }
    se::SweepGrid grid = se::default_grid(*kind, params);
    if (a.steps) {
      for (auto & axis : grid.axes) {
        axis.steps = *a.steps;
      }
    }
    grid = se::sweep(grid);

    std::ostringstream csv;
    se::write_sweep_csv(grid, csv);
    if (a.out.empty() || a.out == "-") {
      std::cout << csv.str();
    } else {
      write_file(a.out, csv.str());
    }
    if (!a.summary.empty()) {
      if (!se::has_fixed_counterpart(*kind)) {
        throw UsageError("--summary is only available for dynamic-ttc and intersection-ttc");
      }
      write_file(a.summary, se::comparison_summary_json(grid, se::compare_with_fixed(grid)));
    }
  } catch (const std::invalid_argument & e) {
    throw se::ConfigError(e.what());
  }
  return kExitOk;
}

int run_table1(const se::Config & cfg, const std::string & out)
{
  std::ostringstream csv;
  se::write_table1_csv(se::table1_rows(cfg.regulation, cfg.display.car_length), cfg.display, csv);
  if (out.empty() || out == "-") {
    std::cout << csv.str();
  } else {
    write_file(out, csv.str());
  }
  return kExitOk;
}

int run_report(const se::Config & cfg, const std::string & out_dir, const std::string & scenario_dir)
{
  std::vector<fs::path> files;
  if (!fs::is_directory(scenario_dir)) {
    throw se::ConfigError("scenario directory not found: " + scenario_dir);
  }
  for (const auto & entry : fs::directory_iterator(scenario_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  const se::ReportResult r = se::write_report(out_dir, cfg, files);
  std::cout << fmt::format(
    "wrote {} files to {} ({} scenarios, {} with collisions)\n", r.files.size(), out_dir, r.scenarios,
    r.collisions);
  return kExitOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Fixed-threshold driving rules versus safety-envelope thresholds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with assumptions, regulation and display sections")
    ->check(CLI::ExistingFile);

  CheckArgs check;
  auto * check_cmd = app.add_subcommand("check", "Evaluate one fixed-threshold rule");
  check_cmd->add_option("--rule", check.rule, "lcp.end.ttc | lcp.begin.thw | intersection.privileged.ttc | "
                                             "cutin.ttc | cutin.gate")
    ->required();
  check_cmd->add_option("--distance", check.distance, "Gap or distance to the conflict point [m]");
  check_cmd->add_option("--vr", check.vr, "Rear / follower speed, e.g. 50kmh or 13.9mps");
  check_cmd->add_option("--vf", check.vf, "Front / ADS speed");
  check_cmd->add_option("--v", check.v, "Speed of the privileged vehicle");
  check_cmd->add_option("--intrusion", check.intrusion, "Lateral intrusion into the lane [m]");
  check_cmd->add_option("--visible-for", check.visible_for, "Time the cut-in vehicle has been visible [s]");
  check_cmd->add_flag("--exact", check.exact, "Compare raw values instead of displayed values");

  std::string scenario_path;
  std::string sim_out_dir;
  auto * sim_cmd = app.add_subcommand("simulate", "Run a scenario file");
  sim_cmd->add_option("scenario", scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
  sim_cmd->add_option("--out-dir", sim_out_dir, "Write trace.csv, pairs.csv and outcome.json here");

  SweepArgs sweep;
  auto * sweep_cmd = app.add_subcommand("sweep", "Evaluate a threshold over a speed grid");
  sweep_cmd->add_option("kind", sweep.kind, "lcp-distance | dynamic-ttc | intersection-ttc | cutin-ttc")
    ->required();
  sweep_cmd->add_option("--beta", sweep.beta, "beta_lon_max for dynamic-ttc [m/s^2]");
  sweep_cmd->add_option("--beta-min", sweep.beta_min, "beta_lon_min for intersection-ttc [m/s^2]");
  sweep_cmd->add_option("--rho", sweep.rho, "Response time [s]");
  sweep_cmd->add_option("--ttc-threshold", sweep.ttc_threshold, "Fixed TTC threshold [s]");
  sweep_cmd->add_option("--cutin-a", sweep.cutin_a, "Cut-in deceleration [m/s^2]");
  sweep_cmd->add_option("--cutin-tau", sweep.cutin_tau, "Time to reach the deceleration [s]");
  sweep_cmd->add_option("--cutin-tau-reaction", sweep.cutin_tau_reaction, "Reaction time [s]");
  sweep_cmd->add_option("--steps", sweep.steps, "Samples per axis")->check(CLI::Range(2, 100000));
  sweep_cmd->add_option("--out", sweep.out, "CSV path (default: stdout)");
  sweep_cmd->add_option("--summary", sweep.summary, "Comparison summary JSON path");

  std::string table_out;
  auto * table_cmd = app.add_subcommand("table1", "Lane-change distance table under the fixed TTC rule");
  table_cmd->add_option("--out", table_out, "CSV path (default: stdout)");

  std::string report_out = "report";
  std::string report_scenarios = SAFETY_ENVELOPE_SCENARIO_DIR;
  auto * report_cmd = app.add_subcommand("report", "Regenerate all tables, sweeps and bundled scenarios");
  report_cmd->add_option("--out-dir", report_out, "Output directory");
  report_cmd->add_option("--scenarios", report_scenarios, "Directory of scenario JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const se::Config cfg = config_path.empty() ? se::Config{} : se::load_config(config_path);
    if (*check_cmd) {
      return run_check(check, cfg);
    }
    if (*sim_cmd) {
      return run_simulate(scenario_path, sim_out_dir);
    }
    if (*sweep_cmd) {
      return run_sweep(sweep, cfg);
    }
    if (*table_cmd) {
      return run_table1(cfg, table_out);
    }
    if (*report_cmd) {
      return run_report(cfg, report_out, report_scenarios);
    }
  } catch (const std::exception & e) {
    // Bad flags, unreadable or invalid files, out-of-domain parameters.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
