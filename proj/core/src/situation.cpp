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

#include "safety_envelope/situation.hpp"

namespace safety_envelope
{

SafetyVerdict evaluate(const PairGaps & gaps, const LonSafetyInput & lon, const LatSafetyInput & lat)
{
  SafetyVerdict v;
  v.lon_gap = gaps.lon.value();
  v.lat_gap = gaps.lat.value();
  v.lon_required = safe_longitudinal_distance(lon).value();
  v.lat_required = safe_lateral_distance(lat).value();

  const bool lon_unsafe = !v.lon_safe();
  const bool lat_unsafe = !v.lat_safe();
  if (lon_unsafe && lat_unsafe) {
    v.situation = SituationClass::Dangerous;
  } else if (lon_unsafe) {
    v.situation = SituationClass::LonUnsafeOnly;
  } else if (lat_unsafe) {
    v.situation = SituationClass::LatUnsafeOnly;
  } else {
    v.situation = SituationClass::Safe;
  }
  return v;
}

SituationClass classify(const PairGaps & gaps, const LonSafetyInput & lon, const LatSafetyInput & lat)
{
  return evaluate(gaps, lon, lat).situation;
}

DangerState update(const DangerState & state, SituationClass prev, SituationClass curr, Duration now)
{
  if (curr != SituationClass::Dangerous) {
    return DangerState{};
  }
  if (state.active) {
    return state;
  }
  DangerState next;
  next.active = true;
  next.entered_at = now;
  next.last_violated =
    prev == SituationClass::LonUnsafeOnly ? ViolatedMargin::Lateral : ViolatedMargin::Longitudinal;
  return next;
}

ProperResponse proper_response(const DangerState & state, const AssumptionSet & assumptions)
{
  if (!state.active) {
    return {};
  }
  switch (state.last_violated) {
    case ViolatedMargin::Longitudinal:
      return {ProperResponse::Kind::BrakeLongitudinal, assumptions.beta_lon_min.value()};
    case ViolatedMargin::Lateral:
      return {ProperResponse::Kind::BrakeLateral, assumptions.beta_lat_min.value()};
    case ViolatedMargin::None:
      break;
  }
  // An active latch always names a margin; treat a malformed one conservatively.
  return {ProperResponse::Kind::BrakeLongitudinal, assumptions.beta_lon_min.value()};
}

std::string_view to_string(SituationClass c)
{
  switch (c) {
    case SituationClass::Safe:
      return "safe";
    case SituationClass::LonUnsafeOnly:
      return "lon_unsafe";
    case SituationClass::LatUnsafeOnly:
      return "lat_unsafe";
    case SituationClass::Dangerous:
      return "dangerous";
  }
  return "unknown";
}

std::string_view to_string(ViolatedMargin m)
{
  switch (m) {
    case ViolatedMargin::None:
      return "none";
    case ViolatedMargin::Longitudinal:
      return "longitudinal";
    case ViolatedMargin::Lateral:
      return "lateral";
  }
  return "unknown";
}

std::string_view to_string(ProperResponse::Kind k)
{
  switch (k) {
    case ProperResponse::Kind::NoAction:
      return "no_action";
    case ProperResponse::Kind::BrakeLongitudinal:
      return "brake_longitudinal";
    case ProperResponse::Kind::BrakeLateral:
      return "brake_lateral";
  }
  return "unknown";
}

}  // namespace safety_envelope
