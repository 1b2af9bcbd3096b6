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

#include "safety_envelope/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "safety_envelope/dynamic_thresholds.hpp"
#include "safety_envelope/policies.hpp"

namespace safety_envelope
{

namespace
{

double axis_clearance(double centre_a, double centre_b, double extent_a, double extent_b)
{
  return std::abs(centre_a - centre_b) - 0.5 * (extent_a + extent_b);
}

// Trapezoidal approach to `target_d`: accelerate up to the peak, cruise, then
// follow the braking parabola into the target.
double lateral_command(const KinematicState & s, double target_d, double peak, double accel, double dt)
{
  const double err = target_d - s.d;
  const double v_des = std::copysign(std::min(peak, std::sqrt(2.0 * accel * std::abs(err))), err);
  return std::clamp((v_des - s.v_lat) / dt, -accel, accel);
}

struct LateralPlan
{
  int keep_lane{0};
  std::optional<int> target_lane;
  double peak{0.8};
  std::optional<std::size_t> record;
  std::optional<PendingLaneChange> pending;
  std::optional<std::size_t> pending_record;
};

void record_pairs(
  const Scenario & sc, const std::vector<KinematicState> & states, TraceTick & tick)
{
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const KinematicState & a = states[i];
      const KinematicState & b = states[j];
      const bool a_rear = a.s <= b.s;
      const AssumptionSet & rear_assumptions = sc.actors[a_rear ? i : j].assumptions;

      PairRecord rec;
      rec.first = i;
      rec.second = j;
      const PairGaps gaps = gaps_between(a, b);
      rec.verdict = evaluate(
        gaps, lon_input_for(a, b, rear_assumptions),
        lat_input_for(a, sc.actors[i].assumptions, b, sc.actors[j].assumptions, sc.actors[i].assumptions));
      const KinematicState & rear = a_rear ? a : b;
      const KinematicState & front = a_rear ? b : a;
      rec.headway = lcp_end_check(gaps.lon, Speed(rear.v_lon), Speed(front.v_lon), sc.regulation);
      tick.pairs.push_back(std::move(rec));
    }
  }
}

void evaluate_intersection(
  const Scenario & sc, const std::vector<KinematicState> & states, double t, IntersectionSummary & out)
{
  const IntersectionSetup & setup = *sc.intersection;
  bool fixed_ok = true;
  bool dynamic_ok = true;
  for (const auto & id : setup.privileged) {
    const std::size_t k = sc.index_of(id);
    const KinematicState & other = states[k];
    const double dist = setup.conflict_s - (other.s + 0.5 * other.length);
    if (dist < 0.0) {
      continue;  // already at or past the conflict point
    }
    const Speed v(other.v_lon);
    fixed_ok = fixed_ok && intersection_privileged_check(Distance(dist), v, sc.regulation).passed;
    if (other.v_lon > 0.0) {
      const AssumptionSet & a = sc.actors[k].assumptions;
      const Duration required = intersection_ttc(v, a.beta_lon_min, a.rho);
      dynamic_ok = dynamic_ok && dist / other.v_lon >= required.value();
    }
  }
  ++out.ticks_evaluated;
  if (fixed_ok) {
    ++out.fixed_permitted_ticks;
    if (!out.first_fixed_permit) {
      out.first_fixed_permit = t;
    }
  }
  if (dynamic_ok) {
    ++out.dynamic_permitted_ticks;
    if (!out.first_dynamic_permit) {
      out.first_dynamic_permit = t;
    }
  }
}

}  // namespace

PairGaps gaps_between(const KinematicState & a, const KinematicState & b)
{
  return {
    Distance(std::max(0.0, axis_clearance(a.s, b.s, a.length, b.length))),
    Distance(std::max(0.0, axis_clearance(a.d, b.d, a.width, b.width)))};
}

bool boxes_overlap(const KinematicState & a, const KinematicState & b)
{
  return axis_clearance(a.s, b.s, a.length, b.length) < 0.0 &&
         axis_clearance(a.d, b.d, a.width, b.width) < 0.0;
}

double lane_intrusion(const KinematicState & actor, const Road & road, int lane)
{
  const double centre = road.lane_center(lane);
  const double lo = std::max(centre - 0.5 * road.lane_width, actor.d - 0.5 * actor.width);
  const double hi = std::min(centre + 0.5 * road.lane_width, actor.d + 0.5 * actor.width);
  return std::max(0.0, hi - lo);
}

std::vector<KinematicState> step(
  std::span<const KinematicState> states, std::span<const Command> commands, double dt)
{
  std::vector<KinematicState> next(states.begin(), states.end());
  for (std::size_t i = 0; i < next.size(); ++i) {
    KinematicState & s = next[i];
    s.a_lon = commands[i].a_lon;
    s.a_lat = commands[i].a_lat;
    s.v_lon = std::max(0.0, s.v_lon + s.a_lon * dt);
    s.s += s.v_lon * dt;
    s.v_lat += s.a_lat * dt;
    s.d += s.v_lat * dt;
  }
  return next;
}

SimOutcome run(const Scenario & sc)
{
  sc.validate();
  const std::size_t n_actors = sc.actors.size();
  const std::size_t n_ticks = sc.tick_count();
  const double dt = sc.dt;

  SimOutcome out;
  std::vector<KinematicState> states;
  std::vector<std::unique_ptr<Policy>> policies;
  std::vector<LateralPlan> plans(n_actors);
  for (std::size_t i = 0; i < n_actors; ++i) {
    out.actor_ids.push_back(sc.actors[i].id);
    states.push_back(sc.actors[i].initial);
    policies.push_back(make_policy(sc.actors[i]));
    plans[i].keep_lane = sc.road.lane_of(states[i].d);
    plans[i].peak = sc.lane_change.peak_lateral_speed;
  }

  // Events in tick order; ties keep file order.
  std::vector<std::pair<std::size_t, const ScriptedEvent *>> events;
  for (const auto & e : sc.events) {
    events.emplace_back(static_cast<std::size_t>(std::llround(e.at / dt)), &e);
  }
  std::stable_sort(events.begin(), events.end(), [](const auto & a, const auto & b) {
    return a.first < b.first;
  });
  std::size_t next_event = 0;

  auto begin_change = [&](std::size_t i, int lane, double peak, std::size_t record, double t) {
    plans[i].target_lane = lane;
    plans[i].peak = peak;
    plans[i].record = record;
    plans[i].pending.reset();
    plans[i].pending_record.reset();
    out.lane_changes[record].began_at = t;
  };

  auto record_tick = [&](double t, std::vector<ProperResponse::Kind> responses) {
    TraceTick tick;
    tick.t = t;
    tick.states = states;
    tick.responses = std::move(responses);
    record_pairs(sc, states, tick);
    out.trace.push_back(std::move(tick));
  };

  IntersectionSummary intersection;
  record_tick(0.0, std::vector<ProperResponse::Kind>(n_actors, ProperResponse::Kind::NoAction));
  if (sc.intersection) {
    evaluate_intersection(sc, states, 0.0, intersection);
  }

  std::vector<KinematicState> observed = states;
  for (std::size_t k = 0; k < n_ticks; ++k) {
    const double t = static_cast<double>(k) * dt;

    for (; next_event < events.size() && events[next_event].first <= k; ++next_event) {
      const ScriptedEvent & e = *events[next_event].second;
      const std::size_t i = sc.index_of(e.actor);
      if (const auto * acc = std::get_if<SetLonAccel>(&e.kind)) {
        if (auto * scripted = dynamic_cast<ScriptedPolicy *>(policies[i].get())) {
          scripted->set_accel(acc->accel);
        } else {
          // A scripted acceleration takes the actor over from its policy.
          policies[i] = std::make_unique<ScriptedPolicy>(acc->accel);
        }
        continue;
      }
      LaneChangeRecord rec;
      rec.actor = sc.actors[i].id;
      rec.requested_at = t;
      rec.s_at_request = states[i].s;
      if (const auto * lc = std::get_if<BeginLaneChange>(&e.kind)) {
        rec.target_lane = lc->target_lane;
        out.lane_changes.push_back(rec);
        plans[i].pending = PendingLaneChange{lc->target_lane, lc->peak_lateral_speed};
        plans[i].pending_record = out.lane_changes.size() - 1;
      } else {
        const auto & ci = std::get<CutIn>(e.kind);
        rec.target_lane = sc.road.lane_of(states[sc.index_of(ci.target)].d);
        out.lane_changes.push_back(rec);
        begin_change(i, rec.target_lane, ci.lateral_speed, out.lane_changes.size() - 1, t);
      }
    }

    std::vector<Command> commands(n_actors);
    std::vector<ProperResponse::Kind> responses(n_actors, ProperResponse::Kind::NoAction);
    for (std::size_t i = 0; i < n_actors; ++i) {
      LateralPlan & plan = plans[i];
      Observation obs;
      obs.t = t;
      obs.dt = dt;
      obs.ego = i;
      obs.states = observed;
      obs.actors = sc.actors;
      obs.road = &sc.road;
      obs.regulation = &sc.regulation;
      obs.lane_change = &sc.lane_change;
      obs.pending_lane_change = plan.pending;
      obs.active_lane_change = plan.target_lane;

      const PolicyDecision decision = policies[i]->decide(obs);
      responses[i] = decision.response;
      if (decision.abort_lane_change && plan.target_lane) {
        plan.target_lane.reset();
        plan.record.reset();
      }
      if (decision.begin_lane_change && plan.pending) {
        begin_change(i, plan.pending->target_lane, plan.pending->peak_lateral_speed, *plan.pending_record, t);
      }

      commands[i].a_lon = decision.a_lon;
      if (decision.a_lat) {
        commands[i].a_lat = *decision.a_lat;
        plan.keep_lane = sc.road.lane_of(states[i].d);
      } else {
        const int lane = plan.target_lane.value_or(plan.keep_lane);
        const double peak = plan.target_lane ? plan.peak : sc.lane_change.peak_lateral_speed;
        commands[i].a_lat =
          lateral_command(states[i], sc.road.lane_center(lane), peak, sc.lane_change.lateral_accel, dt);
      }
    }

    observed = states;
    states = step(states, commands, dt);
    const double t_next = static_cast<double>(k + 1) * dt;

    for (std::size_t i = 0; i < n_actors; ++i) {
      LateralPlan & plan = plans[i];
      if (!plan.target_lane) {
        continue;
      }
      const KinematicState & s = states[i];
      if (sc.road.lane_of(s.d) == *plan.target_lane &&
          std::abs(s.v_lat) < sc.lane_change.end_speed_threshold) {
        LaneChangeRecord & rec = out.lane_changes[*plan.record];
        rec.completed_at = t_next;
        rec.s_at_completion = s.s;
        plan.keep_lane = *plan.target_lane;
        plan.target_lane.reset();
        plan.record.reset();
      }
    }

    record_tick(t_next, responses);
    if (sc.intersection) {
      evaluate_intersection(sc, states, t_next, intersection);
    }

    for (std::size_t i = 0; i < n_actors && !out.collided; ++i) {
      for (std::size_t j = i + 1; j < n_actors; ++j) {
        if (boxes_overlap(states[i], states[j])) {
          out.collided = true;
          out.first_collision = CollisionRecord{t_next, sc.actors[i].id, sc.actors[j].id};
          break;
        }
      }
    }
    if (out.collided) {
      break;
    }
  }

  for (std::size_t i = 0; i < n_actors; ++i) {
    for (std::size_t j = i + 1; j < n_actors; ++j) {
      MinGaps g{sc.actors[i].id, sc.actors[j].id, std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
      for (const auto & tick : out.trace) {
        const PairGaps gaps = gaps_between(tick.states[i], tick.states[j]);
        g.lon = std::min(g.lon, gaps.lon.value());
        g.lat = std::min(g.lat, gaps.lat.value());
      }
      out.min_gaps.push_back(g);
    }
  }
  for (std::size_t i = 0; i < n_actors; ++i) {
    ActorSummary a;
    a.id = sc.actors[i].id;
    for (const auto & tick : out.trace) {
      a.max_decel = std::max(a.max_decel, -tick.states[i].a_lon);
    }
    a.final_s = states[i].s;
    a.final_v = states[i].v_lon;
    out.actors.push_back(a);
  }
  if (sc.intersection) {
    out.intersection = intersection;
  }
  return out;
}

}  // namespace safety_envelope
