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

#include "safety_envelope/scenario_io.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "json_fields.hpp"

namespace safety_envelope
{

namespace
{

using detail::json;

PolicyKind parse_policy_kind(const json & value)
{
  const std::string kind = value.is_string() ? value.get<std::string>() : std::string();
  if (kind == "scripted") {
    return PolicyKind::Scripted;
  }
  if (kind == "fixed_ttc") {
    return PolicyKind::FixedTtc;
  }
  if (kind == "rss") {
    return PolicyKind::Rss;
  }
  throw ConfigError("policy: kind must be one of \"scripted\", \"fixed_ttc\", \"rss\"");
}

std::string_view policy_name(PolicyKind kind)
{
  switch (kind) {
    case PolicyKind::FixedTtc:
      return "fixed_ttc";
    case PolicyKind::Rss:
      return "rss";
    case PolicyKind::Scripted:
      break;
  }
  return "scripted";
}

std::string string_at(const json & obj, const char * key, std::string_view context)
{
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ConfigError(std::string(context) + ": '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

int integer_at(const json & obj, const char * key, std::string_view context)
{
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw ConfigError(std::string(context) + ": '" + key + "' must be an integer");
  }
  return it->get<int>();
}

ActorSpec parse_actor(const json & a, const Road & road, const AssumptionSet & base_assumptions)
{
  detail::check_keys(
    a,
    {"id", "s_m", "lane", "d_m", "speed", "lateral_speed_mps", "accel_mps2", "length_m", "width_m", "policy",
     "assumptions"},
    "actor");
  ActorSpec spec;
  spec.id = string_at(a, "id", "actor");
  const std::string ctx = "actor '" + spec.id + "'";

  KinematicState & s = spec.initial;
  s.s = detail::number_at(a, "s_m", ctx);
  if (a.contains("lane") && a.contains("d_m")) {
    throw ConfigError(ctx + ": give either 'lane' or 'd_m', not both");
  }
  if (a.contains("lane")) {
    const int lane = integer_at(a, "lane", ctx);
    if (lane < 0 || lane >= road.lane_count) {
      throw ConfigError(ctx + ": lane does not exist");
    }
    s.d = road.lane_center(lane);
  } else {
    s.d = detail::number_or(a, "d_m", 0.0, ctx);
  }
  if (!a.contains("speed")) {
    throw ConfigError(ctx + ": missing key 'speed'");
  }
  s.v_lon = detail::speed_value(a["speed"], ctx + " speed");
  s.v_lat = detail::number_or(a, "lateral_speed_mps", 0.0, ctx);
  s.a_lon = detail::number_or(a, "accel_mps2", 0.0, ctx);
  s.length = detail::number_or(a, "length_m", s.length, ctx);
  s.width = detail::number_or(a, "width_m", s.width, ctx);

  spec.assumptions = a.contains("assumptions") ? detail::parse_assumptions(a["assumptions"], base_assumptions)
                                                : base_assumptions;

  spec.policy.set_speed = s.v_lon;
  if (a.contains("policy")) {
    const json & p = a["policy"];
    detail::check_keys(
      p, {"kind", "set_speed", "comfortable_decel_mps2", "cruise_accel_mps2", "lateral_response_speed_mps"},
      ctx + " policy");
    spec.policy.kind = parse_policy_kind(p.value("kind", json()));
    if (p.contains("set_speed")) {
      spec.policy.set_speed = detail::speed_value(p["set_speed"], ctx + " set_speed");
    }
    spec.policy.comfortable_decel =
      detail::number_or(p, "comfortable_decel_mps2", spec.policy.comfortable_decel, ctx);
    spec.policy.cruise_accel = detail::number_or(p, "cruise_accel_mps2", spec.policy.cruise_accel, ctx);
    spec.policy.lateral_response_speed =
      detail::number_or(p, "lateral_response_speed_mps", spec.policy.lateral_response_speed, ctx);
  }
  return spec;
}

ScriptedEvent parse_event(const json & e, const LaneChangeProfile & profile)
{
  detail::require_object(e, "event");
  ScriptedEvent ev;
  ev.at = detail::number_at(e, "at_s", "event");
  ev.actor = string_at(e, "actor", "event");
  const std::string kind = string_at(e, "kind", "event");
  if (kind == "set_lon_accel") {
    detail::check_keys(e, {"at_s", "actor", "kind", "accel_mps2"}, "set_lon_accel event");
    ev.kind = SetLonAccel{detail::number_at(e, "accel_mps2", "set_lon_accel event")};
  } else if (kind == "begin_lane_change") {
    detail::check_keys(
      e, {"at_s", "actor", "kind", "target_lane", "peak_lateral_speed_mps"}, "begin_lane_change event");
    ev.kind = BeginLaneChange{
      integer_at(e, "target_lane", "begin_lane_change event"),
      detail::number_or(e, "peak_lateral_speed_mps", profile.peak_lateral_speed, "begin_lane_change event")};
  } else if (kind == "cut_in") {
    detail::check_keys(e, {"at_s", "actor", "kind", "target", "lateral_speed_mps"}, "cut_in event");
    ev.kind = CutIn{
      string_at(e, "target", "cut_in event"), detail::number_at(e, "lateral_speed_mps", "cut_in event")};
  } else {
    throw ConfigError("event: unknown kind '" + kind + "'");
  }
  return ev;
}

std::string num(double v) { return fmt::format("{:.9g}", v); }

json optional_number(const std::optional<double> & v) { return v ? json(*v) : json(nullptr); }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

Scenario parse_scenario(std::string_view json_text)
{
  const json doc = detail::parse_document(json_text, "scenario");
  detail::check_keys(
    doc,
    {"name", "actors", "events", "road", "duration_s", "dt_s", "regulation", "lane_change", "intersection",
     "assumptions"},
    "scenario");

  Scenario sc;
  sc.name = doc.value("name", std::string("scenario"));
  sc.duration = detail::number_at(doc, "duration_s", "scenario");
  sc.dt = detail::number_or(doc, "dt_s", sc.dt, "scenario");

  if (!doc.contains("road")) {
    throw ConfigError("scenario: missing key 'road'");
  }
  const json & road = doc["road"];
  detail::check_keys(road, {"lane_width_m", "lane_count"}, "road");
  sc.road.lane_width = detail::number_or(road, "lane_width_m", sc.road.lane_width, "road");
  if (road.contains("lane_count")) {
    sc.road.lane_count = integer_at(road, "lane_count", "road");
  }
  if (!(sc.road.lane_width > 0.0) || sc.road.lane_count < 1) {
    throw ConfigError("road: lane_width_m must be positive and lane_count at least 1");
  }

  if (doc.contains("regulation")) {
    sc.regulation = detail::parse_regulation(doc["regulation"], sc.regulation);
  }
  if (doc.contains("lane_change")) {
    const json & lc = doc["lane_change"];
    detail::check_keys(
      lc, {"peak_lateral_speed_mps", "lateral_accel_mps2", "end_speed_threshold_mps"}, "lane_change");
    sc.lane_change.peak_lateral_speed =
      detail::number_or(lc, "peak_lateral_speed_mps", sc.lane_change.peak_lateral_speed, "lane_change");
    sc.lane_change.lateral_accel =
      detail::number_or(lc, "lateral_accel_mps2", sc.lane_change.lateral_accel, "lane_change");
    sc.lane_change.end_speed_threshold =
      detail::number_or(lc, "end_speed_threshold_mps", sc.lane_change.end_speed_threshold, "lane_change");
  }
  AssumptionSet base;
  if (doc.contains("assumptions")) {
    base = detail::parse_assumptions(doc["assumptions"], base);
  }

  if (!doc.contains("actors") || !doc["actors"].is_array()) {
    throw ConfigError("scenario: 'actors' must be an array");
  }
  for (const auto & a : doc["actors"]) {
    sc.actors.push_back(parse_actor(a, sc.road, base));
  }
  if (doc.contains("events")) {
    if (!doc["events"].is_array()) {
      throw ConfigError("scenario: 'events' must be an array");
    }
    for (const auto & e : doc["events"]) {
      sc.events.push_back(parse_event(e, sc.lane_change));
    }
  }
  if (doc.contains("intersection")) {
    const json & x = doc["intersection"];
    detail::check_keys(x, {"ads", "conflict_s_m", "privileged"}, "intersection");
    IntersectionSetup setup;
    setup.ads = string_at(x, "ads", "intersection");
    setup.conflict_s = detail::number_at(x, "conflict_s_m", "intersection");
    if (!x.contains("privileged") || !x["privileged"].is_array()) {
      throw ConfigError("intersection: 'privileged' must be an array of actor ids");
    }
    for (const auto & id : x["privileged"]) {
      if (!id.is_string()) {
        throw ConfigError("intersection: 'privileged' must be an array of actor ids");
      }
      setup.privileged.push_back(id.get<std::string>());
    }
    sc.intersection = setup;
  }

  try {
    sc.validate();
  } catch (const std::invalid_argument & e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario file " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

void write_trace_csv(const SimOutcome & outcome, std::ostream & os)
{
  os << "t,actor,s,d,v_lon,v_lat,a_lon,a_lat\n";
  for (const auto & tick : outcome.trace) {
    for (std::size_t i = 0; i < tick.states.size(); ++i) {
      const KinematicState & s = tick.states[i];
      os << num(tick.t) << ',' << outcome.actor_ids[i] << ',' << num(s.s) << ',' << num(s.d) << ','
         << num(s.v_lon) << ',' << num(s.v_lat) << ',' << num(s.a_lon) << ',' << num(s.a_lat) << '\n';
    }
  }
}

void write_pair_csv(const SimOutcome & outcome, std::ostream & os)
{
  os << "t,first,second,lon_gap,lat_gap,lon_required,lat_required,situation,headway_passed,headway_margin\n";
  for (const auto & tick : outcome.trace) {
    for (const auto & p : tick.pairs) {
      const SafetyVerdict & v = p.verdict;
      os << num(tick.t) << ',' << outcome.actor_ids[p.first] << ',' << outcome.actor_ids[p.second] << ','
         << num(v.lon_gap) << ',' << num(v.lat_gap) << ',' << num(v.lon_required) << ','
         << num(v.lat_required) << ',' << to_string(v.situation) << ',' << (p.headway.passed ? 1 : 0) << ','
         << num(p.headway.margin) << '\n';
    }
  }
}

std::string outcome_to_json(const Scenario & scenario, const SimOutcome & outcome)
{
  json doc;
  doc["scenario"] = scenario.name;
  doc["dt_s"] = scenario.dt;
  doc["duration_s"] = scenario.duration;
  doc["ticks"] = outcome.trace.size();
  doc["collided"] = outcome.collided;
  if (outcome.first_collision) {
    doc["first_collision"] = {
      {"time_s", outcome.first_collision->time},
      {"actors", {outcome.first_collision->first, outcome.first_collision->second}}};
  } else {
    doc["first_collision"] = nullptr;
  }

  json gaps = json::array();
  for (const auto & g : outcome.min_gaps) {
    gaps.push_back({{"actors", {g.first, g.second}}, {"min_lon_gap_m", finite_or_null(g.lon)},
                    {"min_lat_gap_m", finite_or_null(g.lat)}});
  }
  doc["min_gaps"] = gaps;

  json changes = json::array();
  for (const auto & lc : outcome.lane_changes) {
    changes.push_back(
      {{"actor", lc.actor},
       {"target_lane", lc.target_lane},
       {"requested_at_s", lc.requested_at},
       {"s_at_request_m", lc.s_at_request},
       {"began_at_s", optional_number(lc.began_at)},
       {"completed_at_s", optional_number(lc.completed_at)},
       {"s_at_completion_m", optional_number(lc.s_at_completion)},
       {"completed", lc.completed_at.has_value()}});
  }
  doc["lane_changes"] = changes;

  json actors = json::array();
  for (std::size_t i = 0; i < outcome.actors.size(); ++i) {
    const ActorSummary & a = outcome.actors[i];
    std::size_t lon_ticks = 0;
    std::size_t lat_ticks = 0;
    for (const auto & tick : outcome.trace) {
      lon_ticks += tick.responses[i] == ProperResponse::Kind::BrakeLongitudinal;
      lat_ticks += tick.responses[i] == ProperResponse::Kind::BrakeLateral;
    }
    actors.push_back(
      {{"id", a.id},
       {"policy", policy_name(scenario.actors[i].policy.kind)},
       {"max_decel_mps2", a.max_decel},
       {"final_s_m", a.final_s},
       {"final_v_mps", a.final_v},
       {"brake_longitudinal_ticks", lon_ticks},
       {"brake_lateral_ticks", lat_ticks}});
  }
  doc["actors"] = actors;

  if (outcome.intersection) {
    const IntersectionSummary & x = *outcome.intersection;
    doc["intersection"] = {
      {"ticks_evaluated", x.ticks_evaluated},
      {"fixed_permitted_ticks", x.fixed_permitted_ticks},
      {"dynamic_permitted_ticks", x.dynamic_permitted_ticks},
      {"first_fixed_permit_s", optional_number(x.first_fixed_permit)},
      {"first_dynamic_permit_s", optional_number(x.first_dynamic_permit)}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace safety_envelope
