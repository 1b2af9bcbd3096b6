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

#ifndef SAFETY_ENVELOPE__UNITS_HPP_
#define SAFETY_ENVELOPE__UNITS_HPP_

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace safety_envelope
{

/// Throws std::invalid_argument unless `value` is finite.
inline double require_finite(double value, const char * what)
{
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
  return value;
}

/// Throws std::invalid_argument unless `value` is finite and >= 0.
inline double require_non_negative(double value, const char * what)
{
  require_finite(value, what);
  if (value < 0.0) {
    throw std::invalid_argument(std::string(what) + " must be non-negative");
  }
  return value;
}

/// Throws std::invalid_argument unless `value` is finite and > 0.
inline double require_positive(double value, const char * what)
{
  require_finite(value, what);
  if (!(value > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
  return value;
}

/**
 * SI scalar tagged with its physical dimension. All quantities are stored in
 * base SI units (m, s, m/s, m/s^2); NaN and infinities are rejected on
 * construction, and so are negative values for non-negative dimensions.
 */
template <class Tag, bool NonNegative>
class Quantity
{
public:
  constexpr Quantity() = default;

  explicit Quantity(double value)
  : value_(NonNegative ? require_non_negative(value, Tag::name) : require_finite(value, Tag::name))
  {
  }

  constexpr double value() const { return value_; }

  friend constexpr auto operator<=>(const Quantity &, const Quantity &) = default;

private:
  double value_{0.0};
};

struct DistanceTag
{
  static constexpr const char * name = "distance";
};
struct DurationTag
{
  static constexpr const char * name = "duration";
};
struct SpeedTag
{
  static constexpr const char * name = "speed";
};
struct AccelerationTag
{
  static constexpr const char * name = "acceleration";
};

/// Metres, >= 0.
using Distance = Quantity<DistanceTag, true>;
/// Seconds, >= 0.
using Duration = Quantity<DurationTag, true>;
/// Metres per second. Signed; longitudinal consumers check >= 0 themselves.
using Speed = Quantity<SpeedTag, false>;
/// Metres per second squared, signed. Decelerations are stored as magnitudes.
using Acceleration = Quantity<AccelerationTag, false>;

inline constexpr double kKmhPerMps = 3.6;

inline Speed kmh_to_mps(double kmh) { return Speed(require_finite(kmh, "speed [km/h]") / kKmhPerMps); }

inline double mps_to_kmh(Speed v) { return v.value() * kKmhPerMps; }

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__UNITS_HPP_
