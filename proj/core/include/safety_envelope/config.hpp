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

#ifndef SAFETY_ENVELOPE__CONFIG_HPP_
#define SAFETY_ENVELOPE__CONFIG_HPP_

#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "safety_envelope/types.hpp"

namespace safety_envelope
{

/// Malformed scenario or configuration document.
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class RoundingMode { HalfUp, Truncate };

struct DisplayOptions
{
  double car_length{4.7};
  int decimals{1};
  RoundingMode rounding{RoundingMode::HalfUp};
  // Car-length counts in the reference table are cut, not rounded.
  RoundingMode car_length_rounding{RoundingMode::Truncate};
};

/// CLI configuration: keys "assumptions", "regulation", "display".
struct Config
{
  AssumptionSet assumptions;
  RegulationParams regulation;
  DisplayOptions display;
};

/// Throws ConfigError on unknown keys, wrong types or invalid values.
Config parse_config(std::string_view json_text);
Config load_config(const std::filesystem::path & path);

/// Parses "<number>mps" or "<number>kmh".
double parse_speed_flag(std::string_view text);

}  // namespace safety_envelope

#endif  // SAFETY_ENVELOPE__CONFIG_HPP_
