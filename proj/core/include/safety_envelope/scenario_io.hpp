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

#ifndef SAFETY_ENVELOPE__SCENARIO_IO_HPP_
#define SAFETY_ENVELOPE__SCENARIO_IO_HPP_

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>

#include "safety_envelope/config.hpp"
#include "safety_envelope/scenario.hpp"
#include "safety_envelope/simulator.hpp"

namespace safety_envelope
{

/**
 * Parses a scenario document.
 *
 * Top-level keys: "actors", "events", "road", "duration_s", "dt_s", plus the
 * optional "name", "regulation", "lane_change" and "intersection". Speeds are
 * objects of the form {"mps": x} or {"kmh": x}. The parsed scenario is
 * validated before it is returned.
 */
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path & path);

/// Header: t,actor,s,d,v_lon,v_lat,a_lon,a_lat. One row per actor per tick.
void write_trace_csv(const SimOutcome & outcome, std::ostream & os);

/// Per-pair envelope and headway verdicts for every tick.
void write_pair_csv(const SimOutcome & outcome, std::ostream & os);

/// Outcome summary (collision, minimum gaps, lane changes, per-actor summary).
std::string outcome_to_json(const Scenario & scenario, const SimOutcome & outcome);

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__SCENARIO_IO_HPP_
