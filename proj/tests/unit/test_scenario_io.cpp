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

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "json.hpp"

#include "safety_envelope/config.hpp"
#include "safety_envelope/scenario_io.hpp"
#include "safety_envelope/simulator.hpp"

namespace se = safety_envelope;

namespace
{

const char * kMinimal = R"({
  "name": "pair",
  "road": {"lane_width_m": 3.5, "lane_count": 2},
  "duration_s": 1.0,
  "dt_s": 0.01,
  "actors": [
    {"id": "ego", "s_m": 0.0, "lane": 0, "speed": {"kmh": 36.0}, "policy": {"kind": "fixed_ttc"}},
    {"id": "other", "s_m": 30.0, "d_m": 3.5, "speed": {"mps": 8.0}}
  ],
  "events": [
    {"at_s": 0.5, "actor": "other", "kind": "set_lon_accel", "accel_mps2": -2.0},
    {"at_s": 0.2, "actor": "ego", "kind": "begin_lane_change", "target_lane": 1}
  ]
})";

std::string with(const std::string & from, const std::string & to)
{
  std::string text = kMinimal;
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST(ScenarioParse, Minimal)
{
  const auto sc = se::parse_scenario(kMinimal);
  EXPECT_EQ(sc.name, "pair");
  ASSERT_EQ(sc.actors.size(), 2u);
  EXPECT_DOUBLE_EQ(sc.actors[0].initial.v_lon, 10.0);
  EXPECT_EQ(sc.actors[0].policy.kind, se::PolicyKind::FixedTtc);
  EXPECT_EQ(sc.actors[1].policy.kind, se::PolicyKind::Scripted);
  EXPECT_EQ(sc.actors[1].initial.d, 3.5);
  ASSERT_EQ(sc.events.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<se::SetLonAccel>(sc.events[0].kind));
  EXPECT_EQ(std::get<se::BeginLaneChange>(sc.events[1].kind).target_lane, 1);
  EXPECT_EQ(sc.tick_count(), 100u);
}

TEST(ScenarioParse, RejectsMalformedInput)
{
  EXPECT_THROW(se::parse_scenario("{"), se::ConfigError);
  EXPECT_THROW(se::parse_scenario("[]"), se::ConfigError);
  EXPECT_THROW(se::parse_scenario(with("\"duration_s\"", "\"duration\"")), se::ConfigError);
  EXPECT_THROW(se::parse_scenario(with("{\"kmh\": 36.0}", "{\"kmh\": 36.0, \"mps\": 10.0}")), se::ConfigError);
  EXPECT_THROW(se::parse_scenario(with("{\"kmh\": 36.0}", "{\"mph\": 22.0}")), se::ConfigError);
  EXPECT_THROW(se::parse_scenario(with("\"fixed_ttc\"", "\"idm\"")), se::ConfigError);
  EXPECT_THROW(se::parse_scenario(with("\"set_lon_accel\"", "\"teleport\"")), se::ConfigError);
  EXPECT_THROW(se::parse_scenario(with("\"actor\": \"other\"", "\"actor\": \"ghost\"")), se::ConfigError);
  EXPECT_THROW(se::parse_scenario(with("\"s_m\": 30.0, \"d_m\": 3.5", "\"s_m\": 2.0, \"d_m\": 0.5")), se::ConfigError);  // overlap
  EXPECT_THROW(se::parse_scenario(with("\"dt_s\": 0.01", "\"dt_s\": -0.01")), se::ConfigError);
  EXPECT_THROW(se::parse_scenario(with("\"speed\": {\"mps\": 8.0}", "\"speed\": {\"mps\": -8.0}")), se::ConfigError);
  EXPECT_THROW(se::parse_scenario(with("\"target_lane\": 1", "\"target_lane\": 5")), se::ConfigError);
}

TEST(ScenarioParse, LoadMissingFileFails)
{
  EXPECT_THROW(se::load_scenario("/nonexistent/scenario.json"), se::ConfigError);
}

TEST(ScenarioOutput, CsvHeadersAndRows)
{
  const auto sc = se::parse_scenario(kMinimal);
  const auto out = se::run(sc);
  std::ostringstream trace;
  se::write_trace_csv(out, trace);
  std::istringstream lines(trace.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "t,actor,s,d,v_lon,v_lat,a_lon,a_lat");
  std::size_t rows = 0;
  for (std::string l; std::getline(lines, l);) {
    ++rows;
  }
  EXPECT_EQ(rows, out.trace.size() * sc.actors.size());

  std::ostringstream pairs;
  se::write_pair_csv(out, pairs);
  EXPECT_EQ(
    pairs.str().substr(0, pairs.str().find('\n')),
    "t,first,second,lon_gap,lat_gap,lon_required,lat_required,situation,headway_passed,headway_margin");
}

TEST(ScenarioOutput, OutcomeJson)
{
  const auto sc = se::parse_scenario(kMinimal);
  const auto out = se::run(sc);
  const auto doc = nlohmann::json::parse(se::outcome_to_json(sc, out));
  EXPECT_EQ(doc["scenario"], "pair");
  EXPECT_EQ(doc["ticks"], 101);
  EXPECT_EQ(doc["collided"], false);
  EXPECT_TRUE(doc["first_collision"].is_null());
  EXPECT_EQ(doc["actors"].size(), 2u);
  EXPECT_EQ(doc["min_gaps"].size(), 1u);
  EXPECT_EQ(doc["lane_changes"].size(), 1u);
}

TEST(Config, DefaultsAndOverrides)
{
  const auto def = se::parse_config("{}");
  EXPECT_EQ(def.assumptions.rho.value(), 0.5);
  EXPECT_EQ(def.regulation.ttc_threshold.value(), 4.0);
  EXPECT_EQ(def.display.car_length, 4.7);
  EXPECT_EQ(def.display.car_length_rounding, se::RoundingMode::Truncate);

  const auto cfg = se::parse_config(R"({
    "assumptions": {"rho_s": 1.0, "mu_m": 0.2},
    "regulation": {"ttc_threshold_s": 3.0},
    "display": {"decimals": 2, "rounding": "truncate", "car_length_rounding": "half_up"}
  })");
  EXPECT_EQ(cfg.assumptions.rho.value(), 1.0);
  EXPECT_EQ(cfg.assumptions.mu.value(), 0.2);
  EXPECT_EQ(cfg.assumptions.beta_lon_min.value(), 4.0);
  EXPECT_EQ(cfg.regulation.ttc_threshold.value(), 3.0);
  EXPECT_EQ(cfg.display.decimals, 2);
  EXPECT_EQ(cfg.display.rounding, se::RoundingMode::Truncate);
  EXPECT_EQ(cfg.display.car_length_rounding, se::RoundingMode::HalfUp);
}

TEST(Config, Rejects)
{
  EXPECT_THROW(se::parse_config(R"({"extra": 1})"), se::ConfigError);
  EXPECT_THROW(se::parse_config(R"({"assumptions": {"rho": 1}})"), se::ConfigError);
  EXPECT_THROW(se::parse_config(R"({"assumptions": {"rho_s": -1}})"), se::ConfigError);
  EXPECT_THROW(se::parse_config(R"({"assumptions": {"beta_lon_min_mps2": 9}})"), se::ConfigError);
  EXPECT_THROW(se::parse_config(R"({"regulation": {"ttc_threshold_s": "4"}})"), se::ConfigError);
  EXPECT_THROW(se::parse_config(R"({"display": {"rounding": "banker"}})"), se::ConfigError);
  EXPECT_THROW(se::parse_config(R"({"display": {"decimals": 1.5}})"), se::ConfigError);
}

TEST(Config, SpeedFlags)
{
  EXPECT_DOUBLE_EQ(se::parse_speed_flag("10mps"), 10.0);
  EXPECT_DOUBLE_EQ(se::parse_speed_flag("36kmh"), 10.0);
  EXPECT_THROW(se::parse_speed_flag("36"), se::ConfigError);
  EXPECT_THROW(se::parse_speed_flag("fastkmh"), se::ConfigError);
  EXPECT_THROW(se::parse_speed_flag("-3mps"), se::ConfigError);
}
