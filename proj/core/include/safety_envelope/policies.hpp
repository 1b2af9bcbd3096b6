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

#ifndef SAFETY_ENVELOPE__POLICIES_HPP_
#define SAFETY_ENVELOPE__POLICIES_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "safety_envelope/scenario.hpp"
#include "safety_envelope/situation.hpp"

namespace safety_envelope
{

struct PendingLaneChange
{
  int target_lane{0};
  double peak_lateral_speed{0.8};
};

/// What a policy sees when deciding at time `t`.
struct Observation
{
  double t{0.0};
  double dt{0.01};
  std::size_t ego{0};
  // States one tick old.
  std::span<const KinematicState> states;
  std::span<const ActorSpec> actors;
  const Road * road{nullptr};
  const RegulationParams * regulation{nullptr};
  const LaneChangeProfile * lane_change{nullptr};
  std::optional<PendingLaneChange> pending_lane_change;
  std::optional<int> active_lane_change;

  const KinematicState & self() const { return states[ego]; }
};

struct PolicyDecision
{
  double a_lon{0.0};
  // Overrides the lane-keeping controller when set.
  std::optional<double> a_lat;
  bool begin_lane_change{false};
  bool abort_lane_change{false};
  ProperResponse::Kind response{ProperResponse::Kind::NoAction};
};

class Policy
{
public:
  virtual ~Policy() = default;
  virtual PolicyDecision decide(const Observation & obs) = 0;
};

/// Nearest actor ahead of the ego whose box reaches into `lane`, using the
/// regulation's cut-in gates for actors whose centre is not in that lane.
std::optional<std::size_t> front_actor_in_lane(const Observation & obs, int lane);

/// Nearest actors behind / ahead of the ego among those centred in `lane`.
std::optional<std::size_t> follower_in_lane(const Observation & obs, int lane);
std::optional<std::size_t> leader_in_lane(const Observation & obs, int lane);

/// Duration of a lane change over `lateral_distance` with the trapezoidal profile.
double lane_change_duration(double lateral_distance, double peak_speed, double lateral_accel);

/// Longitudinal command that tracks the set speed within the given limits.
double cruise_command(double v, double set_speed, double max_accel, double max_decel, double dt);

/**
 * Keeps exactly the fixed-threshold minima: brakes at the comfortable
 * deceleration only while TTC or THW to the front actor is below threshold,
 * and starts a requested lane change only when the begin check and the
 * predicted end check both pass.
 */
class FixedTtcPolicy : public Policy
{
public:
  explicit FixedTtcPolicy(PolicyConfig config) : config_(config) {}
  PolicyDecision decide(const Observation & obs) override;

  /// Whether a lane change into `lane` would satisfy both LCP checks now.
  static bool lane_change_allowed(const Observation & obs, int lane);

private:
  PolicyConfig config_;
};

/**
 * Follows the safety-envelope model: tracks danger per partner, brakes
 * longitudinally at beta_lon_min behind a partner when the longitudinal margin
 * went last, steers away at beta_lat_min when the lateral one did.
 */
class RssPolicy : public Policy
{
public:
  explicit RssPolicy(PolicyConfig config) : config_(config) {}
  PolicyDecision decide(const Observation & obs) override;

  static bool lane_change_allowed(const Observation & obs, int lane);

private:
  struct PartnerMemory
  {
    SituationClass last{SituationClass::Safe};
    DangerState danger;
    bool seen{false};
  };

  PolicyConfig config_;
  std::vector<PartnerMemory> memory_;
};

/// Holds whatever acceleration the last scripted event set.
class ScriptedPolicy : public Policy
{
public:
  explicit ScriptedPolicy(double initial_accel) : accel_(initial_accel) {}
  PolicyDecision decide(const Observation & obs) override;
  void set_accel(double a) { accel_ = a; }

private:
  double accel_;
};

std::unique_ptr<Policy> make_policy(const ActorSpec & actor);

/// Signed lateral velocity of `a` towards `b`.
double lateral_speed_towards(const KinematicState & a, const KinematicState & b);

/// Builds the envelope inputs for an ordered pair using `assumptions` and each
/// actor's own response time.
LonSafetyInput lon_input_for(
  const KinematicState & a, const KinematicState & b, const AssumptionSet & assumptions);
LatSafetyInput lat_input_for(
  const KinematicState & a, const AssumptionSet & a_assumptions, const KinematicState & b,
  const AssumptionSet & b_assumptions, const AssumptionSet & shared);

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__POLICIES_HPP_
