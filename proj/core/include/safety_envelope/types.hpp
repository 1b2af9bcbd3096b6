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

#ifndef SAFETY_ENVELOPE__TYPES_HPP_
#define SAFETY_ENVELOPE__TYPES_HPP_

#include "safety_envelope/units.hpp"

namespace safety_envelope
{

/**
 * Reasonable worst-case behaviour assumed for one actor.
 *
 * Braking terms are positive magnitudes. `beta_lon_min` is the weakest braking
 * the actor commits to once it responds; `beta_lon_max` is the hardest braking
 * expected from a vehicle in front. The lateral terms are shared by both actors
 * of a lateral pair.
 */
struct AssumptionSet
{
  Duration rho{0.5};
  Acceleration alpha_lon_max{2.0};
  Acceleration beta_lon_min{4.0};
  Acceleration beta_lon_max{8.0};
  Acceleration alpha_lat_max{0.2};
  Acceleration beta_lat_min{0.8};
  // Not a published value; 10 cm lateral fluctuation margin.
  Distance mu{0.1};

  /// Throws std::invalid_argument if any invariant is broken.
  void validate() const;
};

/// Lane-frame state of one actor. `s` and `d` locate the bounding-box centre;
/// `d` grows to the left.
struct KinematicState
{
  double s{0.0};
  double d{0.0};
  double v_lon{0.0};
  double v_lat{0.0};
  double a_lon{0.0};
  double a_lat{0.0};
  double length{4.7};
  double width{1.8};

  void validate() const;
};

/// Thresholds of the fixed-threshold driving requirements.
struct RegulationParams
{
  Duration ttc_threshold{4.0};
  Duration thw_threshold{1.0};
  // Cut-in deceleration model. The published surface does not list (a, tau,
  // tau_reaction); this triple yields its 2.5 s maximum at (27.7, 1.4) m/s.
  Acceleration cutin_a{6.0};
  Duration cutin_tau{0.5};
  Duration cutin_tau_reaction{0.1};
  Distance intrusion_depth{0.30};
  Duration visibility_time{0.72};

  void validate() const;
};

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__TYPES_HPP_
