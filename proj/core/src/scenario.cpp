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

#include "safety_envelope/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "safety_envelope/simulator.hpp"

namespace safety_envelope
{

int Road::lane_of(double d) const
{
  const int lane = static_cast<int>(std::floor(d / lane_width + 0.5));
  return std::clamp(lane, 0, lane_count - 1);
}

std::size_t Scenario::index_of(const std::string & id) const
{
  for (std::size_t i = 0; i < actors.size(); ++i) {
    if (actors[i].id == id) {
      return i;
    }
  }
  throw std::invalid_argument("unknown actor id '" + id + "'");
}

std::size_t Scenario::tick_count() const
{
  return static_cast<std::size_t>(std::floor(duration / dt + 1e-9));
}

void Scenario::validate() const
{
  require_positive(dt, "dt_s");
  require_finite(duration, "duration_s");
  if (duration < dt) {
    throw std::invalid_argument("duration_s must be at least dt_s");
  }
  require_positive(road.lane_width, "lane_width_m");
  if (road.lane_count < 1) {
    throw std::invalid_argument("lane_count must be at least 1");
  }
  require_positive(lane_change.peak_lateral_speed, "peak_lateral_speed");
  require_positive(lane_change.lateral_accel, "lateral_accel");
  require_positive(lane_change.end_speed_threshold, "end_speed_threshold");
  regulation.validate();

  if (actors.empty()) {
    throw std::invalid_argument("scenario has no actors");
  }
  std::set<std::string> ids;
  for (const auto & a : actors) {
    if (a.id.empty()) {
      throw std::invalid_argument("actor id must not be empty");
    }
    if (!ids.insert(a.id).second) {
      throw std::invalid_argument("duplicate actor id '" + a.id + "'");
    }
    a.initial.validate();
    a.assumptions.validate();
    require_non_negative(a.policy.set_speed, "set_speed");
    require_positive(a.policy.comfortable_decel, "comfortable_decel");
    require_non_negative(a.policy.cruise_accel, "cruise_accel");
    require_positive(a.policy.lateral_response_speed, "lateral_response_speed");
  }
  for (std::size_t i = 0; i < actors.size(); ++i) {
    for (std::size_t j = i + 1; j < actors.size(); ++j) {
      if (boxes_overlap(actors[i].initial, actors[j].initial)) {
        throw std::invalid_argument(
          "actors '" + actors[i].id + "' and '" + actors[j].id + "' overlap at start");
      }
    }
  }

  for (const auto & e : events) {
    require_finite(e.at, "event at_s");
    if (e.at < 0.0 || e.at > duration) {
      throw std::invalid_argument("event time outside [0, duration]");
    }
    const std::size_t self = index_of(e.actor);
    if (const auto * lc = std::get_if<BeginLaneChange>(&e.kind)) {
      if (lc->target_lane < 0 || lc->target_lane >= road.lane_count) {
        throw std::invalid_argument("lane change target lane does not exist");
      }
      require_positive(lc->peak_lateral_speed, "peak_lateral_speed_mps");
    } else if (const auto * ci = std::get_if<CutIn>(&e.kind)) {
      if (index_of(ci->target) == self) {
        throw std::invalid_argument("actor cannot cut in on itself");
      }
      require_positive(ci->lateral_speed, "lateral_speed_mps");
    } else {
      require_finite(std::get<SetLonAccel>(e.kind).accel, "accel_mps2");
    }
  }

  if (intersection) {
    index_of(intersection->ads);
    require_finite(intersection->conflict_s, "conflict_s_m");
    for (const auto & id : intersection->privileged) {
      index_of(id);
    }
  }
}

}  // namespace safety_envelope
