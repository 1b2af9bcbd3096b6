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

#include "worst_case.hpp"

#include <algorithm>
#include <cmath>

namespace oracle
{

namespace
{

/**
 * One-dimensional body following "push at `push` for `rho`, then decelerate
 * at `brake` until at rest". Segments inside a step are integrated exactly,
 * so phase changes and the stopping instant need not fall on step edges.
 */
class Body
{
public:
  Body(double v, double push, double rho, double brake) : v_(v), push_(push), rho_(rho), brake_(brake) {}

  void advance(double h)
  {
    double left = h;
    while (left > 0.0) {
      double a = 0.0;
      double seg = left;
      if (t_ < rho_) {
        a = push_;
        seg = std::min(left, rho_ - t_);
      } else if (v_ != 0.0) {
        a = v_ > 0.0 ? -brake_ : brake_;
        seg = std::min(left, std::abs(v_) / brake_);
      }
      x_ += v_ * seg + 0.5 * a * seg * seg;
      v_ += a * seg;
      if (t_ >= rho_ && seg < left) {
        v_ = 0.0;  // came to rest inside this step
      }
      t_ += seg;
      left -= seg;
      if (t_ >= rho_ && v_ == 0.0) {
        t_ += left;
        break;
      }
    }
  }

  bool settled() const { return t_ >= rho_ && v_ == 0.0; }
  double x() const { return x_; }

private:
  double v_;
  double push_;
  double rho_;
  double brake_;
  double x_{0.0};
  double t_{0.0};
};

/// Longitudinal bodies never reverse: braking only removes forward speed.
class ForwardBody
{
public:
  ForwardBody(double v, double push, double rho, double brake) : body_(std::max(v, 0.0), push, rho, brake) {}
  void advance(double h) { body_.advance(h); }
  bool settled() const { return body_.settled(); }
  double x() const { return body_.x(); }

private:
  Body body_;
};

}  // namespace

double longitudinal_min_gap(
  double v_rear, double v_front, double rho, double alpha, double beta_min, double beta_max, double step)
{
  ForwardBody rear(v_rear, alpha, rho, beta_min);
  ForwardBody front(v_front, 0.0, 0.0, beta_max);
  double worst = 0.0;
  while (!(rear.settled() && front.settled())) {
    rear.advance(step);
    front.advance(step);
    worst = std::max(worst, rear.x() - front.x());
  }
  return worst;
}

double braking_distance(double v, double rho, double alpha, double beta_min, double step)
{
  ForwardBody body(v, alpha, rho, beta_min);
  while (!body.settled()) {
    body.advance(step);
  }
  return body.x();
}

double lateral_min_gap(
  double v1, double v2, double rho1, double rho2, double alpha_lat, double beta_lat, double mu, double step)
{
  // Positions grow from actor 1 towards actor 2; the gap shrinks by x1 - x2.
  Body left(v1, alpha_lat, rho1, beta_lat);
  Body right(v2, -alpha_lat, rho2, beta_lat);
  double worst = 0.0;
  while (!(left.settled() && right.settled())) {
    left.advance(step);
    right.advance(step);
    worst = std::max(worst, left.x() - right.x());
  }
  return mu + worst;
}

}  // namespace oracle
