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

#include "safety_envelope/rss_envelope.hpp"

#include <algorithm>
#include <cmath>

namespace safety_envelope
{

namespace
{

// Signed displacement towards the other actor: accelerate for rho, then brake
// towards zero lateral velocity.
double lateral_travel(double v, double rho, double alpha, double beta)
{
  const double v_rho = v + rho * alpha;
  return 0.5 * (v + v_rho) * rho + v_rho * std::abs(v_rho) / (2.0 * beta);
}

}  // namespace

Distance safe_longitudinal_distance(const LonSafetyInput & input)
{
  const AssumptionSet & a = input.assumptions;
  a.validate();
  const double v_r = require_non_negative(input.v_rear.value(), "v_rear");
  const double v_f = require_non_negative(input.v_front.value(), "v_front");
  const double rho = a.rho.value();
  const double alpha = a.alpha_lon_max.value();

  const double v_r_after = v_r + alpha * rho;
  const double bracket = v_r * rho + 0.5 * alpha * rho * rho +
                         v_r_after * v_r_after / (2.0 * a.beta_lon_min.value()) -
                         v_f * v_f / (2.0 * a.beta_lon_max.value());
  return Distance(std::max(bracket, 0.0));
}

Distance safe_lateral_distance(const LatSafetyInput & input)
{
  const AssumptionSet & a = input.assumptions;
  a.validate();
  const double alpha = a.alpha_lat_max.value();
  const double beta = a.beta_lat_min.value();

  // Actor 2 approaches actor 1 by moving in the negative direction, so mirror
  // its velocity and reuse the same worst-case travel.
  const double left = lateral_travel(input.v_left.value(), input.rho_left.value(), alpha, beta);
  const double right = -lateral_travel(-input.v_right.value(), input.rho_right.value(), alpha, beta);
  return Distance(a.mu.value() + std::max(left - right, 0.0));
}

Distance stopping_distance(Speed v, const AssumptionSet & assumptions)
{
  return safe_longitudinal_distance({v, Speed(0.0), assumptions});
}

}  // namespace safety_envelope
