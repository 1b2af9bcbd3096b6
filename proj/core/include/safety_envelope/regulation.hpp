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

#ifndef SAFETY_ENVELOPE__REGULATION_HPP_
#define SAFETY_ENVELOPE__REGULATION_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "safety_envelope/types.hpp"
#include "safety_envelope/units.hpp"

namespace safety_envelope
{

namespace rule_id
{
inline constexpr std::string_view kLcpEndTtc = "lcp.end.ttc";
inline constexpr std::string_view kLcpBeginThw = "lcp.begin.thw";
inline constexpr std::string_view kIntersectionPrivilegedTtc = "intersection.privileged.ttc";
inline constexpr std::string_view kCutinTtc = "cutin.ttc";
inline constexpr std::string_view kCutinGate = "cutin.gate";
}  // namespace rule_id

/// Time to collision. Either a finite duration or "not closing" when the rear
/// is not faster than the front.
class Ttc
{
public:
  static Ttc finite(Duration t) { return Ttc(t); }
  static Ttc not_closing() { return Ttc(std::nullopt); }

  bool closing() const { return value_.has_value(); }
  /// Precondition: closing().
  Duration value() const { return value_.value(); }

  /// True when not closing or the finite value is at least `threshold`.
  bool at_least(Duration threshold) const { return !closing() || *value_ >= threshold; }

  friend bool operator==(const Ttc &, const Ttc &) = default;

private:
  explicit Ttc(std::optional<Duration> v) : value_(v) {}
  std::optional<Duration> value_;
};

/**
 * Outcome of one fixed-threshold rule.
 *
 * `margin` is measured minus threshold in the rule's unit (for rules that
 * bound from above the sign is flipped), so `passed == (margin >= 0)` for every
 * rule except the strict cut-in intrusion gate. A rule whose precondition does
 * not hold reports `applicable == false` and passes.
 */
struct RegVerdict
{
  std::string rule_id;
  bool applicable{true};
  bool passed{true};
  double measured{0.0};
  double threshold{0.0};
  std::string unit;
  double margin{0.0};
  // Free-form qualifier such as "not closing".
  std::string note;
};

Ttc ttc(Distance distance, Speed v_rear, Speed v_front);

/// Time headway; nullopt when the follower is stationary.
std::optional<Duration> thw(Distance distance, Speed v_rear);

/// Gap needed at the end of a lane change so that TTC stays at the threshold.
Distance required_distance_fixed_ttc(Speed v_rear, Speed v_front, Duration ttc_threshold);

/// `v_rear` is the approaching vehicle in the target lane, `v_front` the ADS.
RegVerdict lcp_end_check(Distance distance, Speed v_rear, Speed v_front, const RegulationParams & params);

/// Only applies when the follower in the target lane is not faster than the ADS.
RegVerdict lcp_begin_check(
  Distance distance, Speed v_follower, Speed v_ads, const RegulationParams & params);

/// Privileged traffic must be at least ttc_threshold away from the conflict point.
RegVerdict intersection_privileged_check(
  Distance dist_to_conflict, Speed v_other, const RegulationParams & params);

/// Minimum TTC at the moment of cut-in. A receding cut-in vehicle contributes
/// nothing to the kinematic term, leaving tau/2 + tau_reaction.
Duration cutin_required_ttc(Speed v_rear, Speed v_front, const RegulationParams & params);

bool cutin_applicable(Distance lateral_intrusion, Duration visible_for, const RegulationParams & params);

RegVerdict cutin_gate_check(Distance lateral_intrusion, Duration visible_for, const RegulationParams & params);

/// Cut-in requirement including its gates; not applicable when a gate is shut.
RegVerdict cutin_check(
  Distance distance, Speed v_rear, Speed v_front, Distance lateral_intrusion, Duration visible_for,
  const RegulationParams & params);

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__REGULATION_HPP_
