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

#ifndef SAFETY_ENVELOPE__DYNAMIC_THRESHOLDS_HPP_
#define SAFETY_ENVELOPE__DYNAMIC_THRESHOLDS_HPP_

#include "safety_envelope/units.hpp"

namespace safety_envelope
{

// Speed-dependent TTC thresholds. Callers compare them with a measured TTC.

/// (v_rear + v_front) / (2 beta): the TTC at which the gap equals the RSS
/// longitudinal distance when both vehicles brake equally hard and respond
/// instantly.
Duration dynamic_ttc(Speed v_rear, Speed v_front, Acceleration beta_lon_max);

/// dynamic_ttc plus the response time of the ADS.
Duration dynamic_ttc_with_response(Speed v_rear, Speed v_front, Acceleration beta_lon_max, Duration rho);

/// Time a prioritized vehicle at `v` needs to stop at beta_lon_min after
/// responding, measured from the conflict point.
Duration intersection_ttc(Speed v, Acceleration beta_lon_min, Duration rho);

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__DYNAMIC_THRESHOLDS_HPP_
