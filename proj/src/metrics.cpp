/*
 * Copyright 2026 The rootform Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "rootform/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <numbers>
#include <string>

#include "rootform/errors.hpp"

namespace rootform {

namespace {

using Perm = std::array<int, 3>;
constexpr std::array<Perm, 3> kCyclic = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
constexpr std::array<Perm, 6> kAll = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                       {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};

template <std::size_t N>
double min_over(const std::array<double, 3>& a, const std::array<double, 3>& b,
                const std::array<Perm, N>& perms, MinkowskiOrder q) {
  double best = std::numeric_limits<double>::infinity();
  for (const Perm& p : perms)
    best = std::min(best, lq_distance(a, {b[p[0]], b[p[1]], b[p[2]]}, q));
  return best;
}

// max_i |R(theta) u_i - v_i| for fixed correspondence.
double misfit(const std::array<Vec2, 3>& u, const std::array<Vec2, 3>& v, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Vec2 r{c * u[i].x - s * u[i].y, s * u[i].x + c * u[i].y};
    worst = std::max(worst, (r - v[i]).length());
  }
  return worst;
}

double best_rotation(const std::array<Vec2, 3>& u, const std::array<Vec2, 3>& v,
                     const AlignmentOptions& opt) {
  const double step = 2.0 * std::numbers::pi / opt.samples;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (int m = 0; m < opt.samples; ++m) {
    const double f = misfit(u, v, m * step);
    if (f < best) {
      best = f;
      best_theta = m * step;
    }
  }

  // Golden-section search on the bracket around the best grid angle.
  constexpr double inv_phi = 0.6180339887498949;
  double lo = best_theta - step, hi = best_theta + step;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = misfit(u, v, x1), f2 = misfit(u, v, x2);
  while (hi - lo > opt.angle_tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = misfit(u, v, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = misfit(u, v, x2);
    }
  }
  return std::min({best, f1, f2, misfit(u, v, 0.5 * (lo + hi))});
}

} // namespace

MinkowskiOrder::MinkowskiOrder(double q) : q_(q) {
  if (!(q >= 1.0))
    fail(ErrorKind::InvalidArgument, "Minkowski order must satisfy q >= 1");
}

MinkowskiOrder MinkowskiOrder::parse(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "Inf")
    return infinity();
  double q = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), q);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(ErrorKind::InvalidArgument, "cannot parse Minkowski order '" + std::string(text) + "'");
  return MinkowskiOrder(q);
}

double lq_distance(const std::array<double, 3>& a, const std::array<double, 3>& b,
                   MinkowskiOrder q) {
  std::array<double, 3> d{std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])};
  // Fixed summation order, so that relabelling coordinates (and hence
  // swapping the arguments of the root metrics) gives bit-identical sums.
  std::sort(d.begin(), d.end());
  if (q.is_infinite())
    return std::max({d[0], d[1], d[2]});
  if (q.q() == 1.0)
    return d[0] + d[1] + d[2];
  if (q.q() == 2.0)
    return std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
  // Scale by the largest difference so that large q cannot overflow.
  const double m = std::max({d[0], d[1], d[2]});
  if (m == 0.0)
    return 0.0;
  double s = 0.0;
  for (double x : d)
    s += std::pow(x / m, q.q());
  return m * std::pow(s, 1.0 / q.q());
}

double root_metric(const RootForm& a, const RootForm& b, MinkowskiOrder q) {
  return min_over(a.values(), b.values(), kAll, q);
}

double root_metric_oriented(const OrientedRootForm& a, const OrientedRootForm& b,
                            MinkowskiOrder q) {
  return min_over(a.values(), b.values(), kCyclic, q);
}

double superbase_distance_linf(const ObtuseSuperbase& b, const ObtuseSuperbase& b2,
                               const AlignmentOptions& opt) {
  if (opt.samples < 8)
    fail(ErrorKind::InvalidArgument, "at least 8 angle samples are required");
  if (!(opt.angle_tol > 0.0))
    fail(ErrorKind::InvalidArgument, "angle tolerance must be positive");

  const std::array<Vec2, 3>& v = b.superbase().vectors();
  const std::array<Vec2, 3>& u = b2.superbase().vectors();
  // The central symmetry u -> -u is the rotation by pi, so relabellings and
  // an optional mirror cover every symmetry left to minimise over.
  double best = std::numeric_limits<double>::infinity();
  for (int mirror = 0; mirror < (opt.allow_reflection ? 2 : 1); ++mirror) {
    for (const Perm& p : kAll) {
      std::array<Vec2, 3> w{u[p[0]], u[p[1]], u[p[2]]};
      if (mirror)
        for (Vec2& x : w) x = mirrored(x);
      best = std::min(best, best_rotation(w, v, opt));
    }
  }
  return best;
}

double continuity_bound(double l, double delta, MinkowskiOrder q) {
  if (!(l >= 0.0) || !(delta >= 0.0))
    fail(ErrorKind::InvalidArgument, "length and perturbation must be non-negative");
  const double factor = q.is_infinite() ? 1.0 : std::pow(3.0, 1.0 / q.q());
  return factor * std::sqrt(2.0 * l * delta);
}

} // namespace rootform
