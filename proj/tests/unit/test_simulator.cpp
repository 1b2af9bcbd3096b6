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

#include <cmath>
#include <filesystem>
#include <vector>

#include "safety_envelope/rss_envelope.hpp"
#include "safety_envelope/scenario_io.hpp"
#include "safety_envelope/simulator.hpp"
#include "scenario_builders.hpp"

namespace se = safety_envelope;
namespace fs = std::filesystem;
using testing_support::actor;
using testing_support::brake;
using testing_support::following;

namespace
{

const fs::path kScenarioDir = SAFETY_ENVELOPE_SCENARIO_DIR;

se::KinematicState moving(double v, double a)
{
  se::KinematicState s;
  s.v_lon = v;
  s.a_lon = a;
  return s;
}

bool same_state(const se::KinematicState & a, const se::KinematicState & b)
{
  return a.s == b.s && a.d == b.d && a.v_lon == b.v_lon && a.v_lat == b.v_lat && a.a_lon == b.a_lon &&
         a.a_lat == b.a_lat;
}

}  // namespace

TEST(Step, UniformMotion)
{
  const std::vector<se::KinematicState> s{moving(10.0, 0.0)};
  const std::vector<se::Command> c{{0.0, 0.0}};
  const auto next = se::step(s, c, 0.01);
  EXPECT_DOUBLE_EQ(next[0].s, 0.1);
  EXPECT_EQ(next[0].v_lon, 10.0);
}

TEST(Step, NoReversing)
{
  const std::vector<se::KinematicState> s{moving(1.0, 0.0)};
  const std::vector<se::Command> c{{-10.0, 0.0}};
  const auto next = se::step(s, c, 0.5);
  EXPECT_EQ(next[0].v_lon, 0.0);
  EXPECT_EQ(next[0].s, 0.0);
}

TEST(Step, LateralIsSigned)
{
  const std::vector<se::KinematicState> s{moving(0.0, 0.0)};
  const std::vector<se::Command> c{{0.0, -1.0}};
  const auto next = se::step(s, c, 0.5);
  EXPECT_EQ(next[0].v_lat, -0.5);
  EXPECT_EQ(next[0].d, -0.25);
}

TEST(Step, BrakingToRestMatchesClosedForm)
{
  const double dt = 0.01;
  std::vector<se::KinematicState> s{moving(20.0, 0.0)};
  const std::vector<se::Command> c{{-4.0, 0.0}};
  double t = 0.0;
  while (s[0].v_lon > 0.0) {
    s = se::step(s, c, dt);
    t += dt;
  }
  EXPECT_NEAR(t, 5.0, dt + 1e-9);
  EXPECT_NEAR(s[0].s, 50.0, 20.0 * dt);
}

TEST(Geometry, OverlapIsStrict)
{
  se::KinematicState a;
  se::KinematicState b;
  b.s = 4.7;  // touching bumpers
  EXPECT_FALSE(se::boxes_overlap(a, b));
  EXPECT_EQ(se::gaps_between(a, b).lon.value(), 0.0);
  b.s = 4.69;
  EXPECT_TRUE(se::boxes_overlap(a, b));
  b.d = 1.8;  // side by side, touching
  EXPECT_FALSE(se::boxes_overlap(a, b));
}

TEST(Geometry, LaneIntrusion)
{
  const se::Road road;
  se::KinematicState s;
  s.d = 3.5;
  EXPECT_EQ(se::lane_intrusion(s, road, 0), 0.0);
  s.d = 3.5 - 1.0;  // right edge at 1.6 m, 0.15 m past the boundary at 1.75 m
  EXPECT_NEAR(se::lane_intrusion(s, road, 0), 0.15, 1e-12);
}

TEST(Run, SingleActorUniformMotion)
{
  se::Scenario sc;
  sc.duration = 2.0;
  sc.actors.push_back(actor("solo", 0.0, 0.0, 10.0));
  const auto out = se::run(sc);
  EXPECT_FALSE(out.collided);
  ASSERT_EQ(out.trace.size(), 201u);
  for (std::size_t k = 0; k < out.trace.size(); ++k) {
    EXPECT_NEAR(out.trace[k].states[0].s, 10.0 * out.trace[k].t, 1e-9);
  }
}

TEST(Run, TraceLengthIsTicksPlusOne)
{
  for (const double duration : {0.01, 0.5, 1.0, 3.33}) {
    se::Scenario sc;
    sc.duration = duration;
    sc.actors.push_back(actor("solo", 0.0, 0.0, 1.0));
    EXPECT_EQ(se::run(sc).trace.size(), static_cast<std::size_t>(std::floor(duration / sc.dt + 1e-9)) + 1);
  }
}

TEST(Run, EventsFireBeforePoliciesAtTheirTick)
{
  se::Scenario sc;
  sc.duration = 1.0;
  sc.actors.push_back(actor("solo", 0.0, 0.0, 10.0));
  sc.events.push_back(brake("solo", 0.5, -2.0));
  const auto out = se::run(sc);
  // The command chosen at t = 0.5 is stored in the state of tick 0.51.
  EXPECT_EQ(out.trace[50].states[0].a_lon, 0.0);
  EXPECT_EQ(out.trace[51].states[0].a_lon, -2.0);
}

TEST(Run, PoliciesSeePreviousTick)
{
  // RSS follower at 10 m/s, 0.025 m beyond its safe distance of 14.125 m. One
  // tick of lead braking raises the requirement by about 0.075 m.
  auto sc = following(10.0, 10.0, 14.15, se::PolicyKind::Rss, 1.0);
  sc.events.push_back(brake("front", 0.1, -6.0));
  const auto out = se::run(sc);
  ASSERT_GT(out.trace.size(), 13u);
  EXPECT_EQ(out.trace[11].states[1].a_lon, -6.0);
  for (std::size_t k = 0; k <= 12; ++k) {
    EXPECT_EQ(out.trace[k].states[0].a_lon, 0.0) << k;  // nothing visible yet
  }
  EXPECT_LT(out.trace[13].states[0].a_lon, 0.0);
}

TEST(Run, InvalidScenarioRejected)
{
  se::Scenario sc;
  sc.actors.push_back(actor("a", 0.0, 0.0, 1.0));
  sc.actors.push_back(actor("b", 1.0, 0.0, 1.0));
  EXPECT_THROW(se::run(sc), std::invalid_argument);
  sc.actors[1].id = "a";
  sc.actors[1].initial.s = 100.0;
  EXPECT_THROW(se::run(sc), std::invalid_argument);
  sc.actors[1].id = "b";
  sc.dt = 0.0;
  EXPECT_THROW(se::run(sc), std::invalid_argument);
}

TEST(Run, HaltsAtFirstCollision)
{
  auto sc = following(20.0, 0.0, 5.1, se::PolicyKind::Scripted, 10.0);
  const auto out = se::run(sc);
  ASSERT_TRUE(out.collided);
  ASSERT_TRUE(out.first_collision.has_value());
  EXPECT_NEAR(out.first_collision->time, 0.26, 1e-9);
  EXPECT_EQ(out.trace.back().t, out.first_collision->time);
  EXPECT_EQ(out.min_gaps[0].lon, 0.0);
}

TEST(Run, SuddenBrakeCounterexampleCollides)
{
  auto sc = following(25.0, 25.0, 4.0, se::PolicyKind::FixedTtc);
  sc.events.push_back(brake("front", 1.0, -6.0));
  EXPECT_TRUE(se::run(sc).collided);
}

TEST(Run, SuddenBrakeFromSafeDistanceUnderRssDoesNotCollide)
{
  const se::AssumptionSet a;
  const double gap = se::safe_longitudinal_distance({se::Speed(25.0), se::Speed(25.0), a}).value();
  EXPECT_DOUBLE_EQ(gap, 58.1875);
  auto sc = following(25.0, 25.0, gap, se::PolicyKind::Rss);
  sc.events.push_back(brake("front", 1.0, -6.0));
  const auto out = se::run(sc);
  EXPECT_FALSE(out.collided);
  EXPECT_GT(out.min_gaps[0].lon, 0.0);
  EXPECT_NEAR(out.actors[0].max_decel, a.beta_lon_min.value(), 1e-12);
}

TEST(Run, LaneChangeCompletesOnFreeRoad)
{
  se::Scenario sc;
  sc.duration = 10.0;
  sc.actors.push_back(actor("ego", 0.0, 0.0, 10.0, se::PolicyKind::FixedTtc));
  sc.events.push_back({0.0, "ego", se::BeginLaneChange{1, 0.8}});
  const auto out = se::run(sc);
  ASSERT_EQ(out.lane_changes.size(), 1u);
  const auto & lc = out.lane_changes[0];
  ASSERT_TRUE(lc.began_at && lc.completed_at);
  EXPECT_EQ(*lc.began_at, 0.0);
  // Trapezoid takes 3.5 / 0.8 + 0.8 / 0.5 s; the end is detected below 0.05 m/s.
  EXPECT_NEAR(*lc.completed_at, 3.5 / 0.8 + 1.6, 0.25);
  const auto & last = out.trace.back().states[0];
  EXPECT_NEAR(last.d, 3.5, 0.05);
  EXPECT_LT(std::abs(last.v_lat), 0.05);
  for (const auto & tick : out.trace) {
    EXPECT_LE(std::abs(tick.states[0].v_lat), 0.8 + 1e-9);
  }
}

TEST(Run, Deterministic)
{
  for (const auto & entry : fs::directory_iterator(kScenarioDir)) {
    const auto sc = se::load_scenario(entry.path());
    const auto a = se::run(sc);
    const auto b = se::run(sc);
    ASSERT_EQ(a.trace.size(), b.trace.size()) << entry.path();
    for (std::size_t k = 0; k < a.trace.size(); ++k) {
      ASSERT_EQ(a.trace[k].t, b.trace[k].t);
      for (std::size_t i = 0; i < a.trace[k].states.size(); ++i) {
        ASSERT_TRUE(same_state(a.trace[k].states[i], b.trace[k].states[i])) << entry.path();
      }
    }
    EXPECT_EQ(se::outcome_to_json(sc, a), se::outcome_to_json(sc, b));
  }
}

TEST(Run, HalvingDtMovesMinimumGapsLittle)
{
  for (const auto & entry : fs::directory_iterator(kScenarioDir)) {
    auto sc = se::load_scenario(entry.path());
    const auto coarse = se::run(sc);
    sc.dt *= 0.5;
    const auto fine = se::run(sc);
    EXPECT_EQ(coarse.collided, fine.collided) << entry.path();
    ASSERT_EQ(coarse.min_gaps.size(), fine.min_gaps.size());
    for (std::size_t p = 0; p < coarse.min_gaps.size(); ++p) {
      EXPECT_LT(std::abs(coarse.min_gaps[p].lon - fine.min_gaps[p].lon), 0.1)
        << entry.path() << " " << coarse.min_gaps[p].first << "/" << coarse.min_gaps[p].second;
      EXPECT_LT(std::abs(coarse.min_gaps[p].lat - fine.min_gaps[p].lat), 0.1)
        << entry.path() << " " << coarse.min_gaps[p].first << "/" << coarse.min_gaps[p].second;
    }
  }
}
