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

#include "safety_envelope/analysis.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "safety_envelope/dynamic_thresholds.hpp"
#include "safety_envelope/regulation.hpp"
#include "safety_envelope/scenario_io.hpp"
#include "safety_envelope/simulator.hpp"

namespace safety_envelope
{

namespace
{

constexpr double kNudge = 1e-9;

double scale_for(int decimals) { return std::pow(10.0, decimals); }

}  // namespace

double round_half_up(double x, int decimals)
{
  const double k = scale_for(decimals);
  if (x < 0.0) {
    return -round_half_up(-x, decimals);
  }
  return std::floor(x * k + 0.5 + kNudge) / k;
}

double truncate_to(double x, int decimals)
{
  const double k = scale_for(decimals);
  if (x < 0.0) {
    return -truncate_to(-x, decimals);
  }
  return std::floor(x * k + kNudge) / k;
}

double round_display(double x, int decimals, RoundingMode mode)
{
  return mode == RoundingMode::Truncate ? truncate_to(x, decimals) : round_half_up(x, decimals);
}

std::string format_display(double x, int decimals, RoundingMode mode)
{
  double r = round_display(x, decimals, mode);
  if (r == 0.0) {
    r = 0.0;  // drops the sign of -0.0
  }
  return fmt::format("{:.{}f}", r, decimals);
}

// ---- table -----------------------------------------------------------------

std::vector<Table1Row> table1_rows(const RegulationParams & params, double car_length)
{
  require_positive(car_length, "car_length");
  constexpr double kRear = 50.0;
  constexpr std::array<double, 5> kFront{50.0, 40.0, 30.0, 20.0, 10.0};
  std::vector<Table1Row> rows;
  rows.reserve(kFront.size());
  for (const double front : kFront) {
    Table1Row r;
    r.v_r_kmh = kRear;
    r.v_f_kmh = front;
    r.delta_kmh = kRear - front;
    r.delta_mps = kmh_to_mps(r.delta_kmh).value();
    r.distance_m = required_distance_fixed_ttc(kmh_to_mps(kRear), kmh_to_mps(front), params.ttc_threshold).value();
    r.car_lengths = r.distance_m / car_length;
    rows.push_back(r);
  }
  return rows;
}

void write_table1_csv(const std::vector<Table1Row> & rows, const DisplayOptions & display, std::ostream & os)
{
  const auto f = [&](double x) { return format_display(x, display.decimals, display.rounding); };
  os << "v_r_kmh,v_f_kmh,delta_kmh,delta_mps,distance_ttc_m,car_lengths\n";
  for (const auto & r : rows) {
    os << f(r.v_r_kmh) << ',' << f(r.v_f_kmh) << ',' << f(r.delta_kmh) << ',' << f(r.delta_mps) << ','
       << f(r.distance_m) << ',' << format_display(r.car_lengths, display.decimals, display.car_length_rounding)
       << '\n';
  }
}

// ---- sweeps ----------------------------------------------------------------

std::optional<SweepKind> parse_sweep_kind(std::string_view name)
{
  for (const auto kind :
       {SweepKind::LcpDistance, SweepKind::DynamicTtc, SweepKind::IntersectionTtc, SweepKind::CutinTtc}) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  return std::nullopt;
}

std::string_view to_string(SweepKind kind)
{
  switch (kind) {
    case SweepKind::LcpDistance:
      return "lcp-distance";
    case SweepKind::DynamicTtc:
      return "dynamic-ttc";
    case SweepKind::IntersectionTtc:
      return "intersection-ttc";
    case SweepKind::CutinTtc:
      return "cutin-ttc";
  }
  return "unknown";
}

double SweepAxis::at(std::size_t i) const
{
  if (i + 1 >= steps) {
    return max;
  }
  return min + static_cast<double>(i) * (max - min) / static_cast<double>(steps - 1);
}

SweepParams default_sweep_params(SweepKind kind)
{
  SweepParams p;
  if (kind == SweepKind::IntersectionTtc) {
    p.rho = 1.0;
  }
  return p;
}

std::size_t SweepGrid::cell_count() const
{
  std::size_t n = axes.empty() ? 0 : 1;
  for (const auto & a : axes) {
    n *= a.steps;
  }
  return n;
}

std::vector<double> SweepGrid::coordinates(std::size_t index) const
{
  std::vector<double> out(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    out[k] = axes[k].at(index % axes[k].steps);
    index /= axes[k].steps;
  }
  return out;
}

void SweepGrid::validate() const
{
  const std::size_t expected_axes = kind == SweepKind::IntersectionTtc ? 1 : 2;
  if (axes.size() != expected_axes) {
    throw std::invalid_argument(
      fmt::format("{} sweep needs {} axis(es), got {}", to_string(kind), expected_axes, axes.size()));
  }
  for (const auto & a : axes) {
    require_non_negative(a.min, "axis min");
    require_finite(a.max, "axis max");
    if (!(a.min < a.max)) {
      throw std::invalid_argument("axis '" + a.name + "': min must be below max");
    }
    if (a.steps < 2) {
      throw std::invalid_argument("axis '" + a.name + "': at least 2 steps are required");
    }
  }
  require_positive(params.beta_lon_max, "beta_lon_max");
  require_positive(params.beta_lon_min, "beta_lon_min");
  require_non_negative(params.rho, "rho");
  params.regulation.validate();
}

SweepGrid default_grid(SweepKind kind, const SweepParams & params)
{
  SweepGrid g;
  g.kind = kind;
  g.params = params;
  switch (kind) {
    case SweepKind::LcpDistance:
    case SweepKind::DynamicTtc:
      g.axes = {{"v_r_mps", 0.0, 27.7, 278}, {"v_f_mps", 0.0, 27.7, 278}};
      break;
    case SweepKind::IntersectionTtc:
      g.axes = {{"v_mps", 0.0, 50.0, 501}};
      break;
    case SweepKind::CutinTtc:
      g.axes = {{"v_r_mps", 0.0, 27.7, 278}, {"v_f_mps", 1.4, 27.7, 264}};
      break;
  }
  return g;
}

namespace
{

double evaluate_cell(const SweepGrid & g, const std::vector<double> & x)
{
  const SweepParams & p = g.params;
  switch (g.kind) {
    case SweepKind::LcpDistance:
      return required_distance_fixed_ttc(Speed(x[0]), Speed(x[1]), p.regulation.ttc_threshold).value();
    case SweepKind::DynamicTtc:
      return dynamic_ttc_with_response(Speed(x[0]), Speed(x[1]), Acceleration(p.beta_lon_max), Duration(p.rho))
        .value();
    case SweepKind::IntersectionTtc:
      return intersection_ttc(Speed(x[0]), Acceleration(p.beta_lon_min), Duration(p.rho)).value();
    case SweepKind::CutinTtc:
      return cutin_required_ttc(Speed(x[0]), Speed(x[1]), p.regulation).value();
  }
  return 0.0;
}

bool same_axes(const SweepGrid & a, const SweepGrid & b)
{
  if (a.axes.size() != b.axes.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.axes.size(); ++k) {
    if (a.axes[k].min != b.axes[k].min || a.axes[k].max != b.axes[k].max || a.axes[k].steps != b.axes[k].steps) {
      return false;
    }
  }
  return true;
}

}  // namespace

SweepGrid sweep(SweepGrid grid, unsigned threads)
{
  grid.validate();
  const std::size_t n = grid.cell_count();
  grid.values.assign(n, 0.0);
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  const std::size_t chunk = (n + workers - 1) / workers;

  const auto work = [&grid, n, chunk](std::size_t w) {
    const std::size_t end = std::min(n, (w + 1) * chunk);
    for (std::size_t i = w * chunk; i < end; ++i) {
      grid.values[i] = evaluate_cell(grid, grid.coordinates(i));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 1; w < workers; ++w) {
    pool.emplace_back(work, w);
  }
  work(0);
  for (auto & t : pool) {
    t.join();
  }
  return grid;
}

SweepGrid constant_grid(const SweepGrid & like, double threshold)
{
  SweepGrid g = like;
  g.values.assign(like.cell_count(), threshold);
  return g;
}

std::string_view to_string(Classification c)
{
  switch (c) {
    case Classification::Agree:
      return "agree";
    case Classification::FixedOverConservative:
      return "fixed_over_conservative";
    case Classification::FixedUnderProtective:
      return "fixed_under_protective";
  }
  return "unknown";
}

namespace
{

double percent(std::size_t part, std::size_t whole)
{
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

double ComparisonSummary::percent_over_conservative() const { return percent(over_conservative, cells); }
double ComparisonSummary::percent_under_protective() const { return percent(under_protective, cells); }
double ComparisonSummary::percent_within_band() const { return percent(within_band, cells); }

Comparison compare(const SweepGrid & fixed, const SweepGrid & dynamic, double tolerance, double band)
{
  if (!same_axes(fixed, dynamic)) {
    throw std::invalid_argument("compare: grids do not share axes");
  }
  if (fixed.values.size() != fixed.cell_count() || dynamic.values.size() != dynamic.cell_count()) {
    throw std::invalid_argument("compare: grid values have not been computed");
  }
  require_non_negative(tolerance, "tolerance");
  require_non_negative(band, "band");

  Comparison out;
  out.summary.cells = fixed.values.size();
  out.summary.band = band;
  out.cells.reserve(out.summary.cells);
  for (std::size_t i = 0; i < out.summary.cells; ++i) {
    ComparisonCell c{fixed.values[i], dynamic.values[i], Classification::Agree};
    const double diff = c.fixed - c.dynamic;
    if (diff > tolerance) {
      c.classification = Classification::FixedOverConservative;
      ++out.summary.over_conservative;
    } else if (diff < -tolerance) {
      c.classification = Classification::FixedUnderProtective;
      ++out.summary.under_protective;
    } else {
      ++out.summary.agree;
    }
    out.summary.within_band += std::abs(diff) <= band;
    out.cells.push_back(c);
  }
  return out;
}

bool has_fixed_counterpart(SweepKind kind)
{
  return kind == SweepKind::DynamicTtc || kind == SweepKind::IntersectionTtc;
}

Comparison compare_with_fixed(const SweepGrid & grid, double tolerance, double band)
{
  if (!has_fixed_counterpart(grid.kind)) {
    throw std::invalid_argument(fmt::format("{} has no fixed-threshold counterpart", to_string(grid.kind)));
  }
  return compare(constant_grid(grid, grid.params.regulation.ttc_threshold.value()), grid, tolerance, band);
}

namespace
{

std::string value_column(SweepKind kind)
{
  switch (kind) {
    case SweepKind::LcpDistance:
      return "distance_ttc_m";
    case SweepKind::DynamicTtc:
      return "dynamic_ttc_s";
    case SweepKind::IntersectionTtc:
      return "ttc_intersection_s";
    case SweepKind::CutinTtc:
      return "ttc_cutin_s";
  }
  return "value";
}

std::string cell(double x) { return fmt::format("{:.6f}", x == 0.0 ? 0.0 : x); }

}  // namespace

void write_sweep_csv(const SweepGrid & grid, std::ostream & os, double tolerance)
{
  if (grid.values.size() != grid.cell_count()) {
    throw std::invalid_argument("write_sweep_csv: grid values have not been computed");
  }
  const bool with_fixed = has_fixed_counterpart(grid.kind);
  std::optional<Comparison> cmp;
  if (with_fixed) {
    cmp = compare_with_fixed(grid, tolerance);
  }

  for (const auto & a : grid.axes) {
    os << a.name << ',';
  }
  os << value_column(grid.kind);
  if (with_fixed) {
    os << ",fixed_ttc_s,classification";
  }
  os << '\n';

  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    for (const double x : grid.coordinates(i)) {
      os << cell(x) << ',';
    }
    os << cell(grid.values[i]);
    if (cmp) {
      os << ',' << cell(cmp->cells[i].fixed) << ',' << to_string(cmp->cells[i].classification);
    }
    os << '\n';
  }
}

std::string comparison_summary_json(const SweepGrid & grid, const Comparison & comparison)
{
  using nlohmann::ordered_json;
  const ComparisonSummary & s = comparison.summary;
  ordered_json axes = ordered_json::array();
  for (const auto & a : grid.axes) {
    axes.push_back({{"name", a.name}, {"min", a.min}, {"max", a.max}, {"steps", a.steps}});
  }
  ordered_json doc;
  doc["kind"] = to_string(grid.kind);
  doc["axes"] = axes;
  doc["parameters"] = {
    {"beta_lon_max_mps2", grid.params.beta_lon_max},
    {"beta_lon_min_mps2", grid.params.beta_lon_min},
    {"rho_s", grid.params.rho},
    {"fixed_ttc_s", grid.params.regulation.ttc_threshold.value()}};
  doc["cells"] = s.cells;
  doc["agree"] = s.agree;
  doc["fixed_over_conservative"] = s.over_conservative;
  doc["fixed_under_protective"] = s.under_protective;
  doc["percent_fixed_over_conservative"] = s.percent_over_conservative();
  doc["percent_fixed_under_protective"] = s.percent_under_protective();
  doc["agreement_band_s"] = s.band;
  doc["percent_within_agreement_band"] = s.percent_within_band();
  return doc.dump(2) + "\n";
}

// ---- report ----------------------------------------------------------------

namespace
{

class ReportWriter
{
public:
  explicit ReportWriter(std::filesystem::path root) : root_(std::move(root)) {}

  std::ofstream open(const std::filesystem::path & relative)
  {
    const auto path = root_ / relative;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write " + path.string());
    }
    files_.push_back(relative);
    return out;
  }

  template <class Fn>
  void stream(const std::filesystem::path & relative, Fn && fn)
  {
    std::ofstream out = open(relative);
    fn(out);
  }

  void text(const std::filesystem::path & relative, const std::string & content)
  {
    stream(relative, [&](std::ostream & os) { os << content; });
  }

  std::vector<std::filesystem::path> files() const { return files_; }

private:
  std::filesystem::path root_;
  std::vector<std::filesystem::path> files_;
};

std::string anchors_json(const Config & config)
{
  using nlohmann::ordered_json;
  const DisplayOptions & disp = config.display;
  const auto shown = [&](double x) { return round_display(x, disp.decimals, disp.rounding); };
  const RegulationParams & reg = config.regulation;
  const Acceleration beta(6.0);

  ordered_json doc;
  const auto rows = table1_rows(reg, disp.car_length);
  const Table1Row & bold = rows[3];
  doc["lcp_required_gap_50_20_kmh"] = {{"value_m", bold.distance_m}, {"display", shown(bold.distance_m)}};

  const double d24 = dynamic_ttc(Speed(24.0), Speed(24.0), beta).value();
  const double d5 = dynamic_ttc(Speed(5.0), Speed(5.0), beta).value();
  doc["dynamic_ttc_24_24_beta6"] = {{"value_s", d24}, {"display", shown(d24)}};
  doc["dynamic_ttc_5_5_beta6"] = {{"value_s", d5}, {"display", shown(d5)}};

  const double ti = intersection_ttc(Speed(8.3), beta, Duration(1.0)).value();
  doc["intersection_ttc_8_3_beta6_rho1"] = {{"value_s", ti}, {"display", shown(ti)}};

  // 30 km/h is quoted as 8.3 m/s; the required distance is reported for both
  // the quoted speed and the exact conversion.
  const double v30 = kmh_to_mps(30.0).value();
  const double quoted = round_display(v30, 1, RoundingMode::HalfUp);
  const double req_quoted =
    intersection_privileged_check(Distance(0.0), Speed(quoted), reg).threshold;
  const double req_exact = intersection_privileged_check(Distance(0.0), Speed(v30), reg).threshold;
  doc["intersection_required_distance_30_kmh"] = {
    {"speed_quoted_mps", quoted},
    {"value_m", req_quoted},
    {"display", shown(req_quoted)},
    {"value_exact_speed_m", req_exact}};

  const double cut_max = cutin_required_ttc(Speed(27.7), Speed(1.4), reg).value();
  doc["cutin_required_ttc_27_7_1_4"] = {{"value_s", cut_max}, {"display", shown(cut_max)}};
  return doc.dump(2) + "\n";
}

}  // namespace

ReportResult write_report(
  const std::filesystem::path & out_dir, const Config & config,
  const std::vector<std::filesystem::path> & scenario_files)
{
  ReportWriter w(out_dir);
  ReportResult result;

  w.stream("table1.csv", [&](std::ostream & os) {
    write_table1_csv(table1_rows(config.regulation, config.display.car_length), config.display, os);
  });

  for (const auto kind :
       {SweepKind::LcpDistance, SweepKind::DynamicTtc, SweepKind::IntersectionTtc, SweepKind::CutinTtc}) {
    SweepParams params = default_sweep_params(kind);
    params.regulation = config.regulation;
    const SweepGrid grid = sweep(default_grid(kind, params));
    const std::string stem = fmt::format("sweep_{}", to_string(kind));
    w.stream(stem + ".csv", [&](std::ostream & os) { write_sweep_csv(grid, os); });
    if (has_fixed_counterpart(kind)) {
      w.text(fmt::format("comparison_{}.json", to_string(kind)), comparison_summary_json(grid, compare_with_fixed(grid)));
    }
  }

  w.text("anchors.json", anchors_json(config));

  for (const auto & file : scenario_files) {
    const Scenario sc = load_scenario(file);
    const SimOutcome outcome = run(sc);
    const std::filesystem::path dir = std::filesystem::path("scenarios") / sc.name;
    w.stream(dir / "trace.csv", [&](std::ostream & os) { write_trace_csv(outcome, os); });
    w.stream(dir / "pairs.csv", [&](std::ostream & os) { write_pair_csv(outcome, os); });
    w.text(dir / "outcome.json", outcome_to_json(sc, outcome));
    ++result.scenarios;
    result.collisions += outcome.collided;
  }

  result.files = w.files();
  return result;
}

}  // namespace safety_envelope
