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

#ifndef SAFETY_ENVELOPE__SCENARIO_HPP_
#define SAFETY_ENVELOPE__SCENARIO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "safety_envelope/types.hpp"

namespace safety_envelope
{

enum class PolicyKind { Scripted, FixedTtc, Rss };

struct PolicyConfig
{
  PolicyKind kind{PolicyKind::Scripted};
  // Cruise target in m/s; ignored by scripted actors.
  double set_speed{0.0};
  double comfortable_decel{3.0};
  double cruise_accel{1.0};
  // Cap on lateral speed while steering away in a lateral proper response.
  double lateral_response_speed{1.0};
};

/// Trapezoidal lateral-speed profile used by lane changes.
struct LaneChangeProfile
{
  double peak_lateral_speed{0.8};
  double lateral_accel{0.5};
  // The manoeuvre ends once the actor is in the target lane below this speed.
  double end_speed_threshold{0.05};
};

struct ActorSpec
{
  std::string id;
  KinematicState initial;
  AssumptionSet assumptions;
  PolicyConfig policy;
};

struct SetLonAccel
{
  double accel{0.0};
};

struct BeginLaneChange
{
  int target_lane{0};
  double peak_lateral_speed{0.8};
};

struct CutIn
{
  std::string target;
  double lateral_speed{1.0};
};

struct ScriptedEvent
{
  double at{0.0};
  std::string actor;
  std::variant<SetLonAccel, BeginLaneChange, CutIn> kind;
};

/// Straight road; lane k is centred at d = k * lane_width.
struct Road
{
  double lane_width{3.5};
  int lane_count{2};

  double lane_center(int lane) const { return lane * lane_width; }
  /// Lane containing lateral position `d`, clamped to the road.
  int lane_of(double d) const;
};

/**
 * Abstract unprotected turn: privileged actors drive along their own lane
 * towards a conflict point located at `conflict_s`; the ADS may cross only
 * while every approaching privileged actor satisfies the rule in force.
 */
struct IntersectionSetup
{
  std::string ads;
  double conflict_s{0.0};
  std::vector<std::string> privileged;
};

struct Scenario
{
  std::string name;
  std::vector<ActorSpec> actors;
  std::vector<ScriptedEvent> events;
  Road road;
  double duration{10.0};
  double dt{0.01};
  RegulationParams regulation;
  LaneChangeProfile lane_change;
  std::optional<IntersectionSetup> intersection;

  /// Throws std::invalid_argument describing the first broken invariant.
  void validate() const;
  std::size_t index_of(const std::string & id) const;
  /// floor(duration / dt), tolerant to representation error.
  std::size_t tick_count() const;
};

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__SCENARIO_HPP_
