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

#ifndef SAFETY_ENVELOPE__SIMULATOR_HPP_
#define SAFETY_ENVELOPE__SIMULATOR_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "safety_envelope/regulation.hpp"
#include "safety_envelope/scenario.hpp"
#include "safety_envelope/situation.hpp"

namespace safety_envelope
{

struct Command
{
  double a_lon{0.0};
  double a_lat{0.0};
};

/// Clearances between two boxes; zero on an axis where they overlap.
PairGaps gaps_between(const KinematicState & a, const KinematicState & b);

/// Strict interior overlap of the two lane-frame boxes. Touching is not a
/// collision.
bool boxes_overlap(const KinematicState & a, const KinematicState & b);

/// How far `actor`'s box reaches into `lane`, 0 if it does not.
double lane_intrusion(const KinematicState & actor, const Road & road, int lane);

/**
 * Semi-implicit Euler step. Longitudinal speed is clamped at zero (no
 * reversing); lateral speed is signed. The commanded accelerations are stored
 * in the returned states.
 */
std::vector<KinematicState> step(
  std::span<const KinematicState> states, std::span<const Command> commands, double dt);

struct PairRecord
{
  std::size_t first{0};
  std::size_t second{0};
  SafetyVerdict verdict;
  // Headway rule between the longitudinally ordered pair.
  RegVerdict headway;
};

struct TraceTick
{
  double t{0.0};
  std::vector<KinematicState> states;
  std::vector<PairRecord> pairs;
  std::vector<ProperResponse::Kind> responses;
};

struct CollisionRecord
{
  double time{0.0};
  std::string first;
  std::string second;
};

struct MinGaps
{
  std::string first;
  std::string second;
  double lon{0.0};
  double lat{0.0};
};

struct LaneChangeRecord
{
  std::string actor;
  int target_lane{0};
  double requested_at{0.0};
  double s_at_request{0.0};
  std::optional<double> began_at;
  std::optional<double> completed_at;
  std::optional<double> s_at_completion;
};

struct ActorSummary
{
  std::string id;
  double max_decel{0.0};
  double final_s{0.0};
  double final_v{0.0};
};

struct IntersectionSummary
{
  std::size_t ticks_evaluated{0};
  std::size_t fixed_permitted_ticks{0};
  std::size_t dynamic_permitted_ticks{0};
  std::optional<double> first_fixed_permit;
  std::optional<double> first_dynamic_permit;
};

struct SimOutcome
{
  std::vector<std::string> actor_ids;
  bool collided{false};
  std::optional<CollisionRecord> first_collision;
  std::vector<TraceTick> trace;
  std::vector<MinGaps> min_gaps;
  std::vector<LaneChangeRecord> lane_changes;
  std::vector<ActorSummary> actors;
  std::optional<IntersectionSummary> intersection;
};

/**
 * Runs `scenario` to its duration or to the first collision.
 *
 * At each tick, events scheduled for that tick fire first, then every policy
 * decides from the states of the previous tick, then all actors are stepped.
 * A full run records floor(duration / dt) + 1 ticks.
 */
SimOutcome run(const Scenario & scenario);

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__SIMULATOR_HPP_
