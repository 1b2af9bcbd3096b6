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

#ifndef SAFETY_ENVELOPE__ANALYSIS_HPP_
#define SAFETY_ENVELOPE__ANALYSIS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "safety_envelope/config.hpp"
#include "safety_envelope/types.hpp"

namespace safety_envelope
{

// ---- display rounding ------------------------------------------------------

/// Half-up to `decimals` places; a 1e-9 nudge absorbs binary representation
/// error so that 0.25 -> 0.3 and 33.35 -> 33.4.
double round_half_up(double x, int decimals);
/// Cuts towards zero at `decimals` places, with the same nudge.
double truncate_to(double x, int decimals);
double round_display(double x, int decimals, RoundingMode mode);
/// Rounds, then prints with exactly `decimals` places. Never prints "-0.0".
std::string format_display(double x, int decimals, RoundingMode mode);

// ---- lane-change distance table --------------------------------------------

/// Unrounded row of the fixed-TTC lane-change distance table.
struct Table1Row
{
  double v_r_kmh{0.0};
  double v_f_kmh{0.0};
  double delta_kmh{0.0};
  double delta_mps{0.0};
  double distance_m{0.0};
  double car_lengths{0.0};
};

/// v_r = 50 km/h against v_f = 50, 40, 30, 20, 10 km/h.
std::vector<Table1Row> table1_rows(const RegulationParams & params, double car_length);

/// Header: v_r_kmh,v_f_kmh,delta_kmh,delta_mps,distance_ttc_m,car_lengths.
void write_table1_csv(const std::vector<Table1Row> & rows, const DisplayOptions & display, std::ostream & os);

// ---- parameter sweeps ------------------------------------------------------

enum class SweepKind { LcpDistance, DynamicTtc, IntersectionTtc, CutinTtc };

/// "lcp-distance", "dynamic-ttc", "intersection-ttc", "cutin-ttc".
std::optional<SweepKind> parse_sweep_kind(std::string_view name);
std::string_view to_string(SweepKind kind);

struct SweepAxis
{
  std::string name;
  double min{0.0};
  double max{0.0};
  std::size_t steps{2};
  /// min + i (max - min) / (steps - 1); the last sample is exactly max.
  double at(std::size_t i) const;
};

/// Fixed inputs of a sweep. Which fields matter depends on the kind.
struct SweepParams
{
  double beta_lon_max{6.0};  // dynamic TTC
  double beta_lon_min{6.0};  // intersection TTC
  double rho{0.0};           // dynamic TTC (added when > 0) and intersection TTC
  RegulationParams regulation;  // ttc_threshold and the cut-in model
};

/// SweepParams as used for the published surfaces of `kind`.
SweepParams default_sweep_params(SweepKind kind);

/**
 * One- or two-axis grid. Two-axis kinds use (v_r, v_f) with row-major cells
 * (v_f varies fastest); the intersection kind uses a single speed axis.
 */
struct SweepGrid
{
  SweepKind kind{SweepKind::LcpDistance};
  std::vector<SweepAxis> axes;
  SweepParams params;
  std::vector<double> values;

  std::size_t cell_count() const;
  /// Axis values of cell `index`, one per axis.
  std::vector<double> coordinates(std::size_t index) const;
  /// Throws std::invalid_argument on malformed axes.
  void validate() const;
};

/// Grid over the default speed ranges of `kind` with 0.1 m/s spacing.
SweepGrid default_grid(SweepKind kind, const SweepParams & params);

/**
 * Evaluates every cell. Work is split over `threads` workers (0 picks the
 * hardware concurrency); the result does not depend on the split.
 */
SweepGrid sweep(SweepGrid grid, unsigned threads = 0);

/// Same axes as `like`, every cell equal to `threshold`.
SweepGrid constant_grid(const SweepGrid & like, double threshold);

enum class Classification { Agree, FixedOverConservative, FixedUnderProtective };
std::string_view to_string(Classification c);

struct ComparisonCell
{
  double fixed{0.0};
  double dynamic{0.0};
  Classification classification{Classification::Agree};
};

struct ComparisonSummary
{
  std::size_t cells{0};
  std::size_t agree{0};
  std::size_t over_conservative{0};
  std::size_t under_protective{0};
  // Cells whose thresholds differ by at most `band`.
  std::size_t within_band{0};
  double band{0.1};
  double percent_over_conservative() const;
  double percent_under_protective() const;
  double percent_within_band() const;
};

struct Comparison
{
  std::vector<ComparisonCell> cells;
  ComparisonSummary summary;
};

/// Cellwise comparison. Throws std::invalid_argument if the axes differ.
Comparison compare(
  const SweepGrid & fixed, const SweepGrid & dynamic, double tolerance = 1e-9, double band = 0.1);

/// Whether `kind` is a TTC threshold that is compared against the fixed one.
bool has_fixed_counterpart(SweepKind kind);

/// Dynamic threshold grid against the constant fixed TTC threshold.
/// Precondition: has_fixed_counterpart(grid.kind).
Comparison compare_with_fixed(const SweepGrid & grid, double tolerance = 1e-9, double band = 0.1);

/**
 * One CSV row per cell. Kinds with a fixed counterpart also carry the fixed
 * threshold and the classification of the cell.
 */
void write_sweep_csv(const SweepGrid & grid, std::ostream & os, double tolerance = 1e-9);
std::string comparison_summary_json(const SweepGrid & grid, const Comparison & comparison);

// ---- report ----------------------------------------------------------------

struct ReportResult
{
  std::vector<std::filesystem::path> files;
  std::size_t scenarios{0};
  std::size_t collisions{0};
};

/**
 * Regenerates the table, the four sweeps with their comparisons, the worked
 * examples and every scenario in `scenario_files` below `out_dir`. Output is
 * fully determined by the inputs.
 */
ReportResult write_report(
  const std::filesystem::path & out_dir, const Config & config,
  const std::vector<std::filesystem::path> & scenario_files);

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__ANALYSIS_HPP_
