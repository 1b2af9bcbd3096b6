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

#ifndef SAFETY_ENVELOPE_TESTS__WORST_CASE_HPP_
#define SAFETY_ENVELOPE_TESTS__WORST_CASE_HPP_

// Brute-force worst-case trajectory integrators used as test oracles. They
// share no code with the library: each actor is advanced in fixed time steps
// with exact constant-acceleration kinematics, and the worst closure is read
// off the sampled trajectories.

namespace oracle
{

inline constexpr double kStep = 1e-3;

/// Rear accelerates at `alpha` for `rho`, then brakes at `beta_min` to a stop;
/// the front brakes at `beta_max` from the start. Returns the smallest initial
/// gap that keeps the rear from passing the front's position at any sample.
double longitudinal_min_gap(
  double v_rear, double v_front, double rho, double alpha, double beta_min, double beta_max,
  double step = kStep);

/// Distance covered by the accelerate-then-brake pattern until standstill.
double braking_distance(double v, double rho, double alpha, double beta_min, double step = kStep);

/**
 * Two actors side by side, actor 1 on the left. Velocities are positive from
 * actor 1 towards actor 2. Each steers towards the other at `alpha_lat` for
 * its own response time, then brakes its lateral velocity to zero at
 * `beta_lat`. Returns mu plus the largest lateral closure seen.
 */
double lateral_min_gap(
  double v1, double v2, double rho1, double rho2, double alpha_lat, double beta_lat, double mu,
  double step = kStep);

}  // namespace oracle

#endif  // SAFETY_ENVELOPE_TESTS__WORST_CASE_HPP_
