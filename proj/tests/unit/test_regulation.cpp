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
#include <random>

#include "safety_envelope/regulation.hpp"

namespace se = safety_envelope;

namespace
{

se::Speed kmh(double v) { return se::kmh_to_mps(v); }
se::Speed mps(double v) { return se::Speed(v); }
se::Distance m(double d) { return se::Distance(d); }

}  // namespace

TEST(Ttc, Examples)
{
  const auto t = se::ttc(m(40.0), mps(20.0), mps(10.0));
  ASSERT_TRUE(t.closing());
  EXPECT_DOUBLE_EQ(t.value().value(), 4.0);
  EXPECT_FALSE(se::ttc(m(10.0), mps(10.0), mps(10.0)).closing());
  EXPECT_DOUBLE_EQ(se::ttc(m(4.0), mps(25.0), mps(24.0)).value().value(), 4.0);
  EXPECT_FALSE(se::ttc(m(10.0), mps(5.0), mps(10.0)).closing());
  EXPECT_THROW(se::ttc(m(-1.0), mps(2.0), mps(1.0)), std::invalid_argument);
}

TEST(Thw, Examples)
{
  EXPECT_DOUBLE_EQ(se::thw(m(15.0), mps(15.0))->value(), 1.0);
  EXPECT_FALSE(se::thw(m(5.0), mps(0.0)).has_value());
  EXPECT_NEAR(se::thw(m(13.9), kmh(50.0))->value(), 1.0, 0.001);
}

TEST(RequiredDistance, TableRows)
{
  const se::Duration four(4.0);
  EXPECT_NEAR(se::required_distance_fixed_ttc(kmh(50), kmh(20), four).value(), 33.33, 0.01);
  EXPECT_EQ(se::required_distance_fixed_ttc(kmh(50), kmh(50), four).value(), 0.0);
  EXPECT_NEAR(se::required_distance_fixed_ttc(kmh(50), kmh(10), four).value(), 44.44, 0.01);
  EXPECT_EQ(se::required_distance_fixed_ttc(kmh(20), kmh(50), four).value(), 0.0);
}

TEST(LcpEnd, Examples)
{
  const se::RegulationParams p;
  const auto bold = se::lcp_end_check(m(4.0 * (kmh(50).value() - kmh(20).value())), kmh(50), kmh(20), p);
  EXPECT_TRUE(bold.passed);
  EXPECT_NEAR(bold.margin, 0.0, 1e-12);
  EXPECT_EQ(bold.rule_id, "lcp.end.ttc");

  EXPECT_FALSE(se::lcp_end_check(m(20.0), kmh(50), kmh(20), p).passed);

  const auto equal = se::lcp_end_check(m(0.0), kmh(50), kmh(50), p);
  EXPECT_TRUE(equal.passed);
  EXPECT_EQ(equal.note, "not closing");
}

TEST(LcpEnd, EquivalentToRequiredDistance)
{
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> v(0.0, 40.0);
  std::uniform_real_distribution<double> d(0.0, 200.0);
  const se::RegulationParams p;
  for (int i = 0; i < 5000; ++i) {
    double v_r = v(rng);
    double v_f = v(rng);
    if (v_r <= v_f) {
      std::swap(v_r, v_f);
    }
    if (v_r == v_f) {
      continue;
    }
    const double dist = d(rng);
    const bool by_distance = dist >= se::required_distance_fixed_ttc(mps(v_r), mps(v_f), se::Duration(4.0)).value();
    EXPECT_EQ(se::lcp_end_check(m(dist), mps(v_r), mps(v_f), p).passed, by_distance);
  }
}

TEST(LcpEnd, ZeroClosingPassesAtAnyGap)
{
  const se::RegulationParams p;
  for (const double v : {0.0, 5.0, 13.9, 30.0}) {
    EXPECT_TRUE(se::lcp_end_check(m(0.0), mps(v), mps(v), p).passed);
    EXPECT_EQ(se::required_distance_fixed_ttc(mps(v), mps(v), se::Duration(4.0)).value(), 0.0);
  }
}

TEST(LcpBegin, Examples)
{
  const se::RegulationParams p;
  const auto ok = se::lcp_begin_check(m(13.9), kmh(50), kmh(50), p);
  EXPECT_TRUE(ok.passed);
  EXPECT_TRUE(ok.applicable);
  EXPECT_NEAR(ok.margin, 0.0, 0.02);
  EXPECT_FALSE(se::lcp_begin_check(m(10.0), kmh(50), kmh(50), p).passed);
  const auto na = se::lcp_begin_check(m(1.0), kmh(60), kmh(50), p);
  EXPECT_TRUE(na.passed);
  EXPECT_FALSE(na.applicable);
}

TEST(Intersection, Examples)
{
  const se::RegulationParams p;
  EXPECT_NEAR(se::intersection_privileged_check(m(0.0), mps(8.3), p).threshold, 33.2, 1e-9);
  EXPECT_TRUE(se::intersection_privileged_check(m(0.0), mps(0.0), p).passed);
  EXPECT_TRUE(se::intersection_privileged_check(m(40.0), mps(10.0), p).passed);
  EXPECT_FALSE(se::intersection_privileged_check(m(std::nextafter(40.0, 0.0)), mps(10.0), p).passed);
}

TEST(Cutin, RequiredTtcExamples)
{
  se::RegulationParams p;
  p.cutin_a = se::Acceleration(5.0);
  p.cutin_tau = se::Duration(0.4);
  p.cutin_tau_reaction = se::Duration(0.5);
  EXPECT_DOUBLE_EQ(se::cutin_required_ttc(mps(20), mps(10), p).value(), 1.7);
  EXPECT_DOUBLE_EQ(se::cutin_required_ttc(mps(10), mps(10), p).value(), 0.7);
  // A receding cut-in vehicle does not lower the requirement below the delays.
  EXPECT_DOUBLE_EQ(se::cutin_required_ttc(mps(10), mps(20), p).value(), 0.7);
}

TEST(Cutin, DefaultModelPeaksAtTwoPointFiveSeconds)
{
  const se::RegulationParams p;
  const double peak = se::cutin_required_ttc(mps(27.7), mps(1.4), p).value();
  EXPECT_NEAR(peak, 2.5, 0.05);
  for (double v_r = 0.0; v_r <= 27.7; v_r += 0.1) {
    for (double v_f = 1.4; v_f <= 27.7; v_f += 0.1) {
      EXPECT_LE(se::cutin_required_ttc(mps(v_r), mps(v_f), p).value(), peak + 1e-12);
    }
  }
}

TEST(Cutin, Gates)
{
  const se::RegulationParams p;
  EXPECT_TRUE(se::cutin_applicable(m(0.31), se::Duration(0.72), p));
  EXPECT_FALSE(se::cutin_applicable(m(0.30), se::Duration(10.0), p));
  EXPECT_FALSE(se::cutin_applicable(m(0.5), se::Duration(0.5), p));
  EXPECT_FALSE(se::cutin_gate_check(m(0.30), se::Duration(10.0), p).passed);
  EXPECT_TRUE(se::cutin_gate_check(m(0.31), se::Duration(0.72), p).passed);
}

TEST(Cutin, CheckHonoursGates)
{
  const se::RegulationParams p;
  const auto closed = se::cutin_check(m(1.0), mps(25), mps(20), m(0.2), se::Duration(2.0), p);
  EXPECT_FALSE(closed.applicable);
  EXPECT_TRUE(closed.passed);
  EXPECT_EQ(closed.rule_id, "cutin.ttc");

  const double required = se::cutin_required_ttc(mps(25), mps(20), p).value();
  const auto at = se::cutin_check(m(5.0 * required), mps(25), mps(20), m(0.5), se::Duration(2.0), p);
  EXPECT_TRUE(at.applicable);
  EXPECT_TRUE(at.passed);
  const auto below = se::cutin_check(m(5.0 * required - 0.01), mps(25), mps(20), m(0.5), se::Duration(2.0), p);
  EXPECT_FALSE(below.passed);

  const auto receding = se::cutin_check(m(1.0), mps(20), mps(25), m(0.5), se::Duration(2.0), p);
  EXPECT_TRUE(receding.passed);
}

TEST(Verdicts, MarginSignMatchesPass)
{
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> v(0.0, 30.0);
  std::uniform_real_distribution<double> d(0.0, 100.0);
  const se::RegulationParams p;
  for (int i = 0; i < 2000; ++i) {
    const auto a = se::lcp_end_check(m(d(rng)), mps(v(rng)), mps(v(rng)), p);
    EXPECT_EQ(a.passed, a.margin >= 0.0);
    const auto b = se::lcp_begin_check(m(d(rng)), mps(v(rng)), mps(30.0), p);
    EXPECT_EQ(b.passed, b.margin >= 0.0);
    const auto c = se::intersection_privileged_check(m(d(rng)), mps(v(rng)), p);
    EXPECT_EQ(c.passed, c.margin >= 0.0);
  }
}

TEST(Verdicts, BoundaryEqualityPassesEpsilonBelowFails)
{
  const se::RegulationParams p;
  const double req = se::required_distance_fixed_ttc(mps(20), mps(10), se::Duration(4.0)).value();
  EXPECT_TRUE(se::lcp_end_check(m(req), mps(20), mps(10), p).passed);
  EXPECT_FALSE(se::lcp_end_check(m(std::nextafter(req, 0.0)), mps(20), mps(10), p).passed);
  EXPECT_TRUE(se::lcp_begin_check(m(15.0), mps(15), mps(15), p).passed);
  EXPECT_FALSE(se::lcp_begin_check(m(std::nextafter(15.0, 0.0)), mps(15), mps(15), p).passed);
}
