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

// Random generators and small helpers shared by the unit and acceptance
// tests. All generators are driven by an explicit seeded engine so that
// failures reproduce.

#ifndef ROOTFORM_TESTS_SUPPORT_HPP_
#define ROOTFORM_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "rootform/lattice.hpp"

namespace rootform::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// sigma_max / sigma_min of the matrix with columns v1, v2.
inline double condition_number(const Vec2& v1, const Vec2& v2) {
  const double fro = v1.length_sq() + v2.length_sq();
  const double det = std::abs(cross(v1, v2));
  if (det == 0.0)
    return std::numeric_limits<double>::infinity();
  const double disc = std::sqrt(std::max(0.0, fro * fro - 4.0 * det * det));
  const double s_max = std::sqrt(0.5 * (fro + disc));
  return s_max * s_max / det;  // s_max / s_min with s_min = det / s_max
}

/// Basis with entries in [-scale, scale] and condition number <= max_cond.
inline Basis2 random_basis(Rng& rng, double scale = 10.0, double max_cond = 1e3) {
  for (;;) {
    const Vec2 v1{uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
    const Vec2 v2{uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
    if (condition_number(v1, v2) <= max_cond)
      return Basis2::make(v1, v2);
  }
}

/// Integer 2x2 matrix; the new basis is (a v1 + c v2, b v1 + d v2).
struct IntMatrix {
  long a = 1, b = 0, c = 0, d = 1;
  long det() const { return a * d - b * c; }
};

inline IntMatrix multiply(const IntMatrix& m, const IntMatrix& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}

/// Product of `steps` random shears with |t| <= 2, optionally with a final
/// column swap (det -1).
inline IntMatrix random_unimodular(Rng& rng, int steps, bool allow_negative_det) {
  IntMatrix m;
  for (int s = 0; s < steps; ++s) {
    const long t = uniform_int(rng, -2, 2);
    m = multiply(m, uniform_int(rng, 0, 1) ? IntMatrix{1, t, 0, 1} : IntMatrix{1, 0, t, 1});
  }
  if (allow_negative_det && uniform_int(rng, 0, 1))
    m = multiply(m, IntMatrix{0, 1, 1, 0});
  return m;
}

inline Basis2 apply(const Basis2& b, const IntMatrix& m) {
  const auto comb = [&](long p, long q) {
    return static_cast<double>(p) * b.v1() + static_cast<double>(q) * b.v2();
  };
  return Basis2::make(comb(m.a, m.c), comb(m.b, m.d));
}

inline Basis2 rotate(const Basis2& b, double angle) {
  return Basis2::make(rotated(b.v1(), angle), rotated(b.v2(), angle));
}

inline Basis2 mirror(const Basis2& b) {
  return Basis2::make(mirrored(b.v1()), mirrored(b.v2()));
}

inline double random_angle(Rng& rng) { return uniform(rng, 0.0, 2.0 * std::numbers::pi); }

/// Root form with entries uniform in [0, hi].
inline RootForm random_root_form(Rng& rng, double hi = 5.0) {
  return RootForm::make(uniform(rng, 0.0, hi), uniform(rng, 0.0, hi), uniform(rng, 0.0, hi));
}

inline double max_abs_diff(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_of(const std::array<double, 3>& a) { return std::max({a[0], a[1], a[2]}); }

/// Uniform point of the disk of radius r.
inline Vec2 random_in_disk(Rng& rng, double r) {
  const double rho = r * std::sqrt(uniform(rng, 0.0, 1.0));
  const double phi = random_angle(rng);
  return {rho * std::cos(phi), rho * std::sin(phi)};
}

inline ObtuseSuperbase random_obtuse(Rng& rng, double scale = 10.0) {
  return reduce_to_obtuse(random_basis(rng, scale));
}

/// Obtuse superbase (u0, u1, u2) with |u_i - v_i| <= delta for the
/// same labels. v1 and v2 move by at most delta / 2, so v0 moves by at most
/// delta. Draws that break obtuseness are retried with a smaller radius.
inline std::optional<ObtuseSuperbase> perturb_obtuse(Rng& rng, const ObtuseSuperbase& s,
                                                    double delta) {
  double r = 0.5 * delta;
  for (int attempt = 0; attempt < 60; ++attempt) {
    if (attempt > 0 && attempt % 10 == 0)
      r *= 0.5;
    const Vec2 u1 = s.v1() + random_in_disk(rng, r);
    const Vec2 u2 = s.v2() + random_in_disk(rng, r);
    const Vec2 u0 = -(u1 + u2);
    if (dot(u0, u1) > 0.0 || dot(u0, u2) > 0.0 || dot(u1, u2) > 0.0)
      continue;
    if (std::abs(cross(u1, u2)) <= kDegenerateTol * u1.length_sq())
      continue;
    return ObtuseSuperbase::from_obtuse(Superbase2::make(u0, u1, u2), 0.0);
  }
  return std::nullopt;
}

} // namespace rootform::testing

#endif
