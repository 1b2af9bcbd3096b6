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

#include "safety_envelope/types.hpp"

#include <stdexcept>

namespace safety_envelope
{

void AssumptionSet::validate() const
{
  require_non_negative(alpha_lon_max.value(), "alpha_lon_max");
  require_non_negative(alpha_lat_max.value(), "alpha_lat_max");
  require_positive(beta_lon_min.value(), "beta_lon_min");
  require_positive(beta_lon_max.value(), "beta_lon_max");
  require_positive(beta_lat_min.value(), "beta_lat_min");
  if (beta_lon_min.value() > beta_lon_max.value()) {
    throw std::invalid_argument("beta_lon_min must not exceed beta_lon_max");
  }
}

void KinematicState::validate() const
{
  require_finite(s, "s");
  require_finite(d, "d");
  require_non_negative(v_lon, "v_lon");
  require_finite(v_lat, "v_lat");
  require_finite(a_lon, "a_lon");
  require_finite(a_lat, "a_lat");
  require_positive(length, "length");
  require_positive(width, "width");
}

void RegulationParams::validate() const
{
  require_positive(ttc_threshold.value(), "ttc_threshold");
  require_positive(thw_threshold.value(), "thw_threshold");
  require_positive(cutin_a.value(), "cutin_a");
  require_positive(cutin_tau.value(), "cutin_tau");
  require_positive(cutin_tau_reaction.value(), "cutin_tau_reaction");
}

}  // namespace safety_envelope
