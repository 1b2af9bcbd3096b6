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

#ifndef SAFETY_ENVELOPE__RSS_ENVELOPE_HPP_
#define SAFETY_ENVELOPE__RSS_ENVELOPE_HPP_

#include "safety_envelope/types.hpp"
#include "safety_envelope/units.hpp"

namespace safety_envelope
{

/// Same-direction pair; both longitudinal speeds must be >= 0.
struct LonSafetyInput
{
  Speed v_rear;
  Speed v_front;
  AssumptionSet assumptions;
};

/**
 * Lateral pair. Actor 1 is on the left of actor 2 and lateral velocities are
 * positive when pointing from actor 1 towards actor 2. Only alpha_lat_max,
 * beta_lat_min and mu are read from `assumptions`.
 */
struct LatSafetyInput
{
  Speed v_left;
  Speed v_right;
  Duration rho_left;
  Duration rho_right;
  AssumptionSet assumptions;
};

/**
 * Minimum gap the rear vehicle needs so that it stops behind the front vehicle
 * when the front brakes at up to beta_lon_max while the rear accelerates at up
 * to alpha_lon_max for rho and then brakes at beta_lon_min.
 */
Distance safe_longitudinal_distance(const LonSafetyInput & input);

/**
 * Minimum lateral gap: both actors accelerate towards each other at
 * alpha_lat_max for their own response time, then brake laterally at
 * beta_lat_min until their lateral velocity is zero; mu must remain.
 *
 * Braking travel is signed by the post-response velocity, so an actor already
 * moving away keeps moving away while it brakes. For the approaching case the
 * result is the textbook expression. Always >= mu.
 */
Distance safe_lateral_distance(const LatSafetyInput & input);

/// Distance a non-prioritized vehicle at `v` needs to stop before a conflict
/// point. Identical to safe_longitudinal_distance with a stationary front.
Distance stopping_distance(Speed v, const AssumptionSet & assumptions);

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__RSS_ENVELOPE_HPP_
