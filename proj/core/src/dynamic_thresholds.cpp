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

#include "safety_envelope/dynamic_thresholds.hpp"

namespace safety_envelope
{

Duration dynamic_ttc(Speed v_rear, Speed v_front, Acceleration beta_lon_max)
{
  const double beta = require_positive(beta_lon_max.value(), "beta_lon_max");
  const double v_r = require_non_negative(v_rear.value(), "v_rear");
  const double v_f = require_non_negative(v_front.value(), "v_front");
  return Duration((v_r + v_f) / (2.0 * beta));
}

Duration dynamic_ttc_with_response(Speed v_rear, Speed v_front, Acceleration beta_lon_max, Duration rho)
{
  return Duration(dynamic_ttc(v_rear, v_front, beta_lon_max).value() + rho.value());
}

Duration intersection_ttc(Speed v, Acceleration beta_lon_min, Duration rho)
{
  const double beta = require_positive(beta_lon_min.value(), "beta_lon_min");
  return Duration(require_non_negative(v.value(), "v") / (2.0 * beta) + rho.value());
}

}  // namespace safety_envelope
