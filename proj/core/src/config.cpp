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

#include "safety_envelope/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json_fields.hpp"

namespace safety_envelope
{

namespace detail
{

void require_object(const json & value, std::string_view context)
{
  if (!value.is_object()) {
    throw ConfigError(std::string(context) + ": expected a JSON object");
  }
}

void check_keys(const json & obj, std::initializer_list<std::string_view> allowed, std::string_view context)
{
  require_object(obj, context);
  for (const auto & item : obj.items()) {
    bool known = false;
    for (const auto k : allowed) {
      known = known || item.key() == k;
    }
    if (!known) {
      throw ConfigError(std::string(context) + ": unknown key '" + item.key() + "'");
    }
  }
}

double number_at(const json & obj, const char * key, std::string_view context)
{
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ConfigError(std::string(context) + ": missing key '" + key + "'");
  }
  if (!it->is_number()) {
    throw ConfigError(std::string(context) + ": '" + key + "' must be a number");
  }
  return it->get<double>();
}

double number_or(const json & obj, const char * key, double fallback, std::string_view context)
{
  return obj.contains(key) ? number_at(obj, key, context) : fallback;
}

double speed_value(const json & value, std::string_view context)
{
  check_keys(value, {"mps", "kmh"}, context);
  if (value.size() != 1) {
    throw ConfigError(std::string(context) + ": speed needs exactly one of 'mps' or 'kmh'");
  }
  if (value.contains("kmh")) {
    return number_at(value, "kmh", context) / kKmhPerMps;
  }
  return number_at(value, "mps", context);
}

AssumptionSet parse_assumptions(const json & obj, AssumptionSet base)
{
  constexpr std::string_view ctx = "assumptions";
  check_keys(
    obj,
    {"rho_s", "alpha_lon_max_mps2", "beta_lon_min_mps2", "beta_lon_max_mps2", "alpha_lat_max_mps2",
     "beta_lat_min_mps2", "mu_m"},
    ctx);
  try {
    base.rho = Duration(number_or(obj, "rho_s", base.rho.value(), ctx));
    base.alpha_lon_max = Acceleration(number_or(obj, "alpha_lon_max_mps2", base.alpha_lon_max.value(), ctx));
    base.beta_lon_min = Acceleration(number_or(obj, "beta_lon_min_mps2", base.beta_lon_min.value(), ctx));
    base.beta_lon_max = Acceleration(number_or(obj, "beta_lon_max_mps2", base.beta_lon_max.value(), ctx));
    base.alpha_lat_max = Acceleration(number_or(obj, "alpha_lat_max_mps2", base.alpha_lat_max.value(), ctx));
    base.beta_lat_min = Acceleration(number_or(obj, "beta_lat_min_mps2", base.beta_lat_min.value(), ctx));
    base.mu = Distance(number_or(obj, "mu_m", base.mu.value(), ctx));
    base.validate();
  } catch (const std::invalid_argument & e) {
    throw ConfigError(std::string(ctx) + ": " + e.what());
  }
  return base;
}

RegulationParams parse_regulation(const json & obj, RegulationParams base)
{
  constexpr std::string_view ctx = "regulation";
  check_keys(
    obj,
    {"ttc_threshold_s", "thw_threshold_s", "cutin_a_mps2", "cutin_tau_s", "cutin_tau_reaction_s",
     "intrusion_depth_m", "visibility_time_s"},
    ctx);
  try {
    base.ttc_threshold = Duration(number_or(obj, "ttc_threshold_s", base.ttc_threshold.value(), ctx));
    base.thw_threshold = Duration(number_or(obj, "thw_threshold_s", base.thw_threshold.value(), ctx));
    base.cutin_a = Acceleration(number_or(obj, "cutin_a_mps2", base.cutin_a.value(), ctx));
    base.cutin_tau = Duration(number_or(obj, "cutin_tau_s", base.cutin_tau.value(), ctx));
    base.cutin_tau_reaction =
      Duration(number_or(obj, "cutin_tau_reaction_s", base.cutin_tau_reaction.value(), ctx));
    base.intrusion_depth = Distance(number_or(obj, "intrusion_depth_m", base.intrusion_depth.value(), ctx));
    base.visibility_time = Duration(number_or(obj, "visibility_time_s", base.visibility_time.value(), ctx));
    base.validate();
  } catch (const std::invalid_argument & e) {
    throw ConfigError(std::string(ctx) + ": " + e.what());
  }
  return base;
}

json parse_document(std::string_view text, std::string_view context)
{
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error & e) {
    throw ConfigError(std::string(context) + ": " + e.what());
  }
}

}  // namespace detail

namespace
{

RoundingMode parse_rounding(const detail::json & value, std::string_view key)
{
  const std::string mode = value.is_string() ? value.get<std::string>() : std::string();
  if (mode == "half_up") {
    return RoundingMode::HalfUp;
  }
  if (mode == "truncate") {
    return RoundingMode::Truncate;
  }
  throw ConfigError("display: '" + std::string(key) + "' must be \"half_up\" or \"truncate\"");
}

}  // namespace

Config parse_config(std::string_view json_text)
{
  const detail::json doc = detail::parse_document(json_text, "config");
  detail::check_keys(doc, {"assumptions", "regulation", "display"}, "config");

  Config cfg;
  if (doc.contains("assumptions")) {
    cfg.assumptions = detail::parse_assumptions(doc["assumptions"], cfg.assumptions);
  }
  if (doc.contains("regulation")) {
    cfg.regulation = detail::parse_regulation(doc["regulation"], cfg.regulation);
  }
  if (doc.contains("display")) {
    const auto & d = doc["display"];
    detail::check_keys(d, {"car_length_m", "decimals", "rounding", "car_length_rounding"}, "display");
    cfg.display.car_length = detail::number_or(d, "car_length_m", cfg.display.car_length, "display");
    if (!(cfg.display.car_length > 0.0)) {
      throw ConfigError("display: car_length_m must be positive");
    }
    const double decimals = detail::number_or(d, "decimals", cfg.display.decimals, "display");
    if (decimals < 0 || decimals > 9 || decimals != static_cast<int>(decimals)) {
      throw ConfigError("display: decimals must be an integer in [0, 9]");
    }
    cfg.display.decimals = static_cast<int>(decimals);
    if (d.contains("rounding")) {
      cfg.display.rounding = parse_rounding(d["rounding"], "rounding");
    }
    if (d.contains("car_length_rounding")) {
      cfg.display.car_length_rounding = parse_rounding(d["car_length_rounding"], "car_length_rounding");
    }
  }
  return cfg;
}

Config load_config(const std::filesystem::path & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

double parse_speed_flag(std::string_view text)
{
  double divisor = 1.0;
  std::string_view number;
  if (text.size() > 3 && text.substr(text.size() - 3) == "mps") {
    number = text.substr(0, text.size() - 3);
  } else if (text.size() > 3 && text.substr(text.size() - 3) == "kmh") {
    divisor = kKmhPerMps;
    number = text.substr(0, text.size() - 3);
  } else {
    throw ConfigError("speed '" + std::string(text) + "' needs a unit suffix: <number>mps or <number>kmh");
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
  if (ec != std::errc() || ptr != number.data() + number.size() || !std::isfinite(value)) {
    throw ConfigError("speed '" + std::string(text) + "' is not a number");
  }
  if (value < 0.0) {
    throw ConfigError("speed '" + std::string(text) + "' must be non-negative");
  }
  return value / divisor;
}

}  // namespace safety_envelope
