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

#include "safety_envelope/regulation.hpp"

#include <algorithm>
#include <limits>

namespace safety_envelope
{

namespace
{

double lon_speed(Speed v, const char * what) { return require_non_negative(v.value(), what); }

RegVerdict lower_bound_verdict(std::string_view id, double measured, double threshold, const char * unit)
{
  RegVerdict v;
  v.rule_id = std::string(id);
  v.measured = measured;
  v.threshold = threshold;
  v.unit = unit;
  v.margin = measured - threshold;
  v.passed = v.margin >= 0.0;
  return v;
}

}  // namespace

Ttc ttc(Distance distance, Speed v_rear, Speed v_front)
{
  const double closing = lon_speed(v_rear, "v_rear") - lon_speed(v_front, "v_front");
  if (closing <= 0.0) {
    return Ttc::not_closing();
  }
  return Ttc::finite(Duration(distance.value() / closing));
}

std::optional<Duration> thw(Distance distance, Speed v_rear)
{
  const double v = lon_speed(v_rear, "v_rear");
  if (v == 0.0) {
    return std::nullopt;
  }
  return Duration(distance.value() / v);
}

Distance required_distance_fixed_ttc(Speed v_rear, Speed v_front, Duration ttc_threshold)
{
  const double closing = lon_speed(v_rear, "v_rear") - lon_speed(v_front, "v_front");
  return Distance(std::max(0.0, ttc_threshold.value() * closing));
}

RegVerdict lcp_end_check(Distance distance, Speed v_rear, Speed v_front, const RegulationParams & params)
{
  // Expressed as distance so the verdict stays finite when not closing; the
  // comparison is the same as TTC >= threshold.
  const Distance required = required_distance_fixed_ttc(v_rear, v_front, params.ttc_threshold);
  RegVerdict v = lower_bound_verdict(rule_id::kLcpEndTtc, distance.value(), required.value(), "m");
  if (!ttc(distance, v_rear, v_front).closing()) {
    v.note = "not closing";
  }
  return v;
}

RegVerdict lcp_begin_check(
  Distance distance, Speed v_follower, Speed v_ads, const RegulationParams & params)
{
  const double vf = lon_speed(v_follower, "v_follower");
  const double va = lon_speed(v_ads, "v_ads");
  RegVerdict v =
    lower_bound_verdict(rule_id::kLcpBeginThw, distance.value(), vf * params.thw_threshold.value(), "m");
  if (vf > va) {
    v.applicable = false;
    v.passed = true;
    v.note = "follower faster than ADS";
  }
  return v;
}

RegVerdict intersection_privileged_check(
  Distance dist_to_conflict, Speed v_other, const RegulationParams & params)
{
  const double v = lon_speed(v_other, "v_other");
  RegVerdict verdict = lower_bound_verdict(
    rule_id::kIntersectionPrivilegedTtc, dist_to_conflict.value(), params.ttc_threshold.value() * v, "m");
  if (v == 0.0) {
    verdict.note = "not closing";
  }
  return verdict;
}

Duration cutin_required_ttc(Speed v_rear, Speed v_front, const RegulationParams & params)
{
  const double closing = require_finite(v_rear.value(), "v_rear") - require_finite(v_front.value(), "v_front");
  const double a = require_positive(params.cutin_a.value(), "cutin_a");
  return Duration(
    std::max(0.0, closing / (2.0 * a)) + 0.5 * params.cutin_tau.value() + params.cutin_tau_reaction.value());
}

bool cutin_applicable(Distance lateral_intrusion, Duration visible_for, const RegulationParams & params)
{
  return lateral_intrusion > params.intrusion_depth && visible_for >= params.visibility_time;
}

RegVerdict cutin_gate_check(Distance lateral_intrusion, Duration visible_for, const RegulationParams & params)
{
  RegVerdict v;
  v.rule_id = std::string(rule_id::kCutinGate);
  v.measured = lateral_intrusion.value();
  v.threshold = params.intrusion_depth.value();
  v.unit = "m";
  v.margin = v.measured - v.threshold;
  // Strict on depth: passing means the cut-in requirement is in force.
  v.passed = cutin_applicable(lateral_intrusion, visible_for, params);
  if (!(visible_for >= params.visibility_time)) {
    v.note = "not visible long enough";
  }
  return v;
}

RegVerdict cutin_check(
  Distance distance, Speed v_rear, Speed v_front, Distance lateral_intrusion, Duration visible_for,
  const RegulationParams & params)
{
  const Duration required = cutin_required_ttc(v_rear, v_front, params);
  const Ttc measured = ttc(distance, v_rear, v_front);

  RegVerdict v;
  v.rule_id = std::string(rule_id::kCutinTtc);
  v.threshold = required.value();
  v.unit = "s";
  if (measured.closing()) {
    v.measured = measured.value().value();
    v.margin = v.measured - v.threshold;
  } else {
    v.measured = std::numeric_limits<double>::infinity();
    v.margin = std::numeric_limits<double>::infinity();
    v.note = "not closing";
  }
  v.passed = v.margin >= 0.0;
  if (!cutin_applicable(lateral_intrusion, visible_for, params)) {
    v.applicable = false;
    v.passed = true;
    v.note = "gate closed";
  }
  return v;
}

}  // namespace safety_envelope
