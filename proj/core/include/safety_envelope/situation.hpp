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

#ifndef SAFETY_ENVELOPE__SITUATION_HPP_
#define SAFETY_ENVELOPE__SITUATION_HPP_

#include <string_view>

#include "safety_envelope/rss_envelope.hpp"
#include "safety_envelope/types.hpp"

namespace safety_envelope
{

enum class SituationClass { Safe, LonUnsafeOnly, LatUnsafeOnly, Dangerous };

enum class ViolatedMargin { None, Longitudinal, Lateral };

/// Latched record of the danger episode between one actor pair.
struct DangerState
{
  ViolatedMargin last_violated{ViolatedMargin::None};
  Duration entered_at{};
  bool active{false};

  friend bool operator==(const DangerState &, const DangerState &) = default;
};

struct ProperResponse
{
  enum class Kind { NoAction, BrakeLongitudinal, BrakeLateral };

  Kind kind{Kind::NoAction};
  // Minimum braking magnitude the response requires, 0 for NoAction. Lateral
  // braking is directed away from the other actor; the caller knows which way
  // that is.
  double min_decel{0.0};

  friend bool operator==(const ProperResponse &, const ProperResponse &) = default;
};

/// Bumper-to-bumper and side-to-side clearances of a pair.
struct PairGaps
{
  Distance lon;
  Distance lat;
};

/// Per-axis verdict of one evaluation.
struct SafetyVerdict
{
  double lon_gap{0.0};
  double lat_gap{0.0};
  double lon_required{0.0};
  double lat_required{0.0};
  SituationClass situation{SituationClass::Safe};

  bool lon_safe() const { return lon_gap >= lon_required; }
  bool lat_safe() const { return lat_gap >= lat_required; }
};

SafetyVerdict evaluate(const PairGaps & gaps, const LonSafetyInput & lon, const LatSafetyInput & lat);

SituationClass classify(const PairGaps & gaps, const LonSafetyInput & lon, const LatSafetyInput & lat);

/**
 * Advances the danger latch from the class seen at the previous evaluation to
 * the current one.
 *
 * Entering Dangerous from LatUnsafeOnly means the longitudinal margin went
 * last; from LonUnsafeOnly, the lateral one. A direct jump from Safe (both
 * margins lost within one tick) resolves to Longitudinal. Once active, the
 * latch keeps its margin until the pair leaves Dangerous.
 */
DangerState update(const DangerState & state, SituationClass prev, SituationClass curr, Duration now);

ProperResponse proper_response(const DangerState & state, const AssumptionSet & assumptions);

std::string_view to_string(SituationClass c);
std::string_view to_string(ViolatedMargin m);
std::string_view to_string(ProperResponse::Kind k);

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__SITUATION_HPP_
