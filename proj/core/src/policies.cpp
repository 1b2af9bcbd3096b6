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

#include "safety_envelope/policies.hpp"

#include <algorithm>
#include <cmath>

#include "safety_envelope/regulation.hpp"
#include "safety_envelope/rss_envelope.hpp"
#include "safety_envelope/simulator.hpp"

namespace safety_envelope
{

namespace
{

double rear_bumper(const KinematicState & s) { return s.s - 0.5 * s.length; }
double front_bumper(const KinematicState & s) { return s.s + 0.5 * s.length; }

double peak_speed_for(const Observation & obs)
{
  return obs.pending_lane_change ? obs.pending_lane_change->peak_lateral_speed
                                 : obs.lane_change->peak_lateral_speed;
}

}  // namespace

double lateral_speed_towards(const KinematicState & a, const KinematicState & b)
{
  if (b.d > a.d) {
    return a.v_lat;
  }
  if (b.d < a.d) {
    return -a.v_lat;
  }
  return 0.0;
}

LonSafetyInput lon_input_for(
  const KinematicState & a, const KinematicState & b, const AssumptionSet & assumptions)
{
  const bool a_rear = a.s <= b.s;
  const KinematicState & rear = a_rear ? a : b;
  const KinematicState & front = a_rear ? b : a;
  return {Speed(rear.v_lon), Speed(front.v_lon), assumptions};
}

LatSafetyInput lat_input_for(
  const KinematicState & a, const AssumptionSet & a_assumptions, const KinematicState & b,
  const AssumptionSet & b_assumptions, const AssumptionSet & shared)
{
  // Larger d is further left; "towards the other" is then the -d direction.
  const bool a_left = a.d >= b.d;
  const KinematicState & left = a_left ? a : b;
  const KinematicState & right = a_left ? b : a;
  const Duration rho_left = a_left ? a_assumptions.rho : b_assumptions.rho;
  const Duration rho_right = a_left ? b_assumptions.rho : a_assumptions.rho;
  return {Speed(-left.v_lat), Speed(-right.v_lat), rho_left, rho_right, shared};
}

std::optional<std::size_t> front_actor_in_lane(const Observation & obs, int lane)
{
  const KinematicState & ego = obs.self();
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < obs.states.size(); ++j) {
    if (j == obs.ego) {
      continue;
    }
    const KinematicState & other = obs.states[j];
    if (other.s <= ego.s) {
      continue;
    }
    const bool centred = obs.road->lane_of(other.d) == lane;
    const double intrusion = lane_intrusion(other, *obs.road, lane);
    const bool cutting_in =
      intrusion > 0.0 && cutin_applicable(Distance(intrusion), Duration(obs.t), *obs.regulation);
    if (!centred && !cutting_in) {
      continue;
    }
    if (!best || other.s < obs.states[*best].s) {
      best = j;
    }
  }
  return best;
}

std::optional<std::size_t> follower_in_lane(const Observation & obs, int lane)
{
  const KinematicState & ego = obs.self();
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < obs.states.size(); ++j) {
    const KinematicState & other = obs.states[j];
    if (j == obs.ego || obs.road->lane_of(other.d) != lane || other.s >= ego.s) {
      continue;
    }
    if (!best || other.s > obs.states[*best].s) {
      best = j;
    }
  }
  return best;
}

std::optional<std::size_t> leader_in_lane(const Observation & obs, int lane)
{
  const KinematicState & ego = obs.self();
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < obs.states.size(); ++j) {
    const KinematicState & other = obs.states[j];
    if (j == obs.ego || obs.road->lane_of(other.d) != lane || other.s < ego.s) {
      continue;
    }
    if (!best || other.s < obs.states[*best].s) {
      best = j;
    }
  }
  return best;
}

double lane_change_duration(double lateral_distance, double peak_speed, double lateral_accel)
{
  const double dist = std::abs(lateral_distance);
  if (dist >= peak_speed * peak_speed / lateral_accel) {
    return dist / peak_speed + peak_speed / lateral_accel;
  }
  return 2.0 * std::sqrt(dist / lateral_accel);
}

double cruise_command(double v, double set_speed, double max_accel, double max_decel, double dt)
{
  return std::clamp((set_speed - v) / dt, -max_decel, max_accel);
}

bool FixedTtcPolicy::lane_change_allowed(const Observation & obs, int lane)
{
  const KinematicState & ego = obs.self();
  const RegulationParams & reg = *obs.regulation;
  const double t_lc = lane_change_duration(
    obs.road->lane_center(lane) - ego.d, peak_speed_for(obs), obs.lane_change->lateral_accel);

  if (const auto f = follower_in_lane(obs, lane)) {
    const KinematicState & fol = obs.states[*f];
    const double gap = rear_bumper(ego) - front_bumper(fol);
    const double predicted = gap + (ego.v_lon - fol.v_lon) * t_lc;
    if (gap < 0.0 || predicted < 0.0) {
      return false;
    }
    if (!lcp_begin_check(Distance(gap), Speed(fol.v_lon), Speed(ego.v_lon), reg).passed) {
      return false;
    }
    if (!lcp_end_check(Distance(predicted), Speed(fol.v_lon), Speed(ego.v_lon), reg).passed) {
      return false;
    }
  }
  if (const auto l = leader_in_lane(obs, lane)) {
    const KinematicState & lead = obs.states[*l];
    const double gap = rear_bumper(lead) - front_bumper(ego);
    const double predicted = gap + (lead.v_lon - ego.v_lon) * t_lc;
    if (gap < 0.0 || predicted < 0.0) {
      return false;
    }
    if (!lcp_end_check(Distance(predicted), Speed(ego.v_lon), Speed(lead.v_lon), reg).passed) {
      return false;
    }
  }
  return true;
}

PolicyDecision FixedTtcPolicy::decide(const Observation & obs)
{
  const KinematicState & ego = obs.self();
  const RegulationParams & reg = *obs.regulation;
  PolicyDecision out;
  out.a_lon =
    cruise_command(ego.v_lon, config_.set_speed, config_.cruise_accel, config_.comfortable_decel, obs.dt);

  std::vector<int> lanes{obs.road->lane_of(ego.d)};
  if (obs.active_lane_change && *obs.active_lane_change != lanes.front()) {
    lanes.push_back(*obs.active_lane_change);
  }
  bool breach = false;
  for (const int lane : lanes) {
    const auto f = front_actor_in_lane(obs, lane);
    if (!f) {
      continue;
    }
    const KinematicState & front = obs.states[*f];
    const double gap = rear_bumper(front) - front_bumper(ego);
    if (gap <= 0.0) {
      breach = true;
      break;
    }
    const Ttc t = ttc(Distance(gap), Speed(ego.v_lon), Speed(front.v_lon));
    const auto headway = thw(Distance(gap), Speed(ego.v_lon));
    if (!t.at_least(reg.ttc_threshold) || (headway && *headway < reg.thw_threshold)) {
      breach = true;
      break;
    }
  }
  if (breach) {
    out.a_lon = -config_.comfortable_decel;
  }
  if (obs.pending_lane_change) {
    out.begin_lane_change = lane_change_allowed(obs, obs.pending_lane_change->target_lane);
  }
  return out;
}

bool RssPolicy::lane_change_allowed(const Observation & obs, int lane)
{
  const KinematicState & ego = obs.self();
  const AssumptionSet & a = obs.actors[obs.ego].assumptions;
  const double t_lc = lane_change_duration(
    obs.road->lane_center(lane) - ego.d, peak_speed_for(obs), obs.lane_change->lateral_accel);

  if (const auto f = follower_in_lane(obs, lane)) {
    const KinematicState & fol = obs.states[*f];
    const double gap = rear_bumper(ego) - front_bumper(fol);
    const double predicted = gap + (ego.v_lon - fol.v_lon) * t_lc;
    const double required = safe_longitudinal_distance({Speed(fol.v_lon), Speed(ego.v_lon), a}).value();
    if (gap < required || predicted < required) {
      return false;
    }
  }
  if (const auto l = leader_in_lane(obs, lane)) {
    const KinematicState & lead = obs.states[*l];
    const double gap = rear_bumper(lead) - front_bumper(ego);
    const double predicted = gap + (lead.v_lon - ego.v_lon) * t_lc;
    const double required = safe_longitudinal_distance({Speed(ego.v_lon), Speed(lead.v_lon), a}).value();
    if (gap < required || predicted < required) {
      return false;
    }
  }
  return true;
}

PolicyDecision RssPolicy::decide(const Observation & obs)
{
  const KinematicState & ego = obs.self();
  const AssumptionSet & a = obs.actors[obs.ego].assumptions;
  memory_.resize(obs.states.size());

  PolicyDecision out;
  // Cruising never exceeds the acceleration the envelope assumes during rho.
  out.a_lon = cruise_command(
    ego.v_lon, config_.set_speed, std::min(config_.cruise_accel, a.alpha_lon_max.value()),
    config_.comfortable_decel, obs.dt);

  for (std::size_t j = 0; j < obs.states.size(); ++j) {
    if (j == obs.ego) {
      continue;
    }
    const KinematicState & other = obs.states[j];
    const SituationClass curr = classify(
      gaps_between(ego, other), lon_input_for(ego, other, a),
      lat_input_for(ego, a, other, obs.actors[j].assumptions, a));

    PartnerMemory & mem = memory_[j];
    const SituationClass prev = mem.seen ? mem.last : curr;
    mem.danger = update(mem.danger, prev, curr, Duration(obs.t));
    mem.last = curr;
    mem.seen = true;

    const ProperResponse response = proper_response(mem.danger, a);
    if (response.kind == ProperResponse::Kind::BrakeLongitudinal) {
      // Only the rear vehicle owes a longitudinal response.
      if (ego.s < other.s) {
        out.a_lon = std::min(out.a_lon, -response.min_decel);
        if (out.response != ProperResponse::Kind::BrakeLateral) {
          out.response = response.kind;
        }
      }
    } else if (response.kind == ProperResponse::Kind::BrakeLateral && !out.a_lat) {
      const double away = ego.d >= other.d ? 1.0 : -1.0;
      const double v_away = away * ego.v_lat;
      const double road_lo = -0.5 * obs.road->lane_width;
      const double road_hi = (obs.road->lane_count - 0.5) * obs.road->lane_width;
      const double room =
        away > 0.0 ? road_hi - (ego.d + 0.5 * ego.width) : (ego.d - 0.5 * ego.width) - road_lo;
      const double stop_dist = v_away > 0.0 ? v_away * v_away / (2.0 * response.min_decel) : 0.0;
      const double target = room > stop_dist + 0.05 ? config_.lateral_response_speed : 0.0;
      const double a_away = std::clamp((target - v_away) / obs.dt, -response.min_decel, response.min_decel);
      out.a_lat = away * a_away;
      out.response = response.kind;
    }
  }

  if (out.response == ProperResponse::Kind::BrakeLateral && obs.active_lane_change) {
    out.abort_lane_change = true;
  } else if (obs.pending_lane_change) {
    out.begin_lane_change = lane_change_allowed(obs, obs.pending_lane_change->target_lane);
  }
  return out;
}

PolicyDecision ScriptedPolicy::decide(const Observation &)
{
  PolicyDecision out;
  out.a_lon = accel_;
  out.begin_lane_change = true;
  return out;
}

std::unique_ptr<Policy> make_policy(const ActorSpec & actor)
{
  switch (actor.policy.kind) {
    case PolicyKind::FixedTtc:
      return std::make_unique<FixedTtcPolicy>(actor.policy);
    case PolicyKind::Rss:
      return std::make_unique<RssPolicy>(actor.policy);
    case PolicyKind::Scripted:
      break;
  }
  return std::make_unique<ScriptedPolicy>(actor.initial.a_lon);
}

}  // namespace safety_envelope
