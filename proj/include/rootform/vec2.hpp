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
#ifndef ROOTFORM_VEC2_HPP_
#define ROOTFORM_VEC2_HPP_

#include <cmath>

namespace rootform {

/// Plane vector, coordinates in Angstroms.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

  double length_sq() const { return x * x + y * y; }
  double length() const { return std::hypot(x, y); }
  bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
constexpr Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }
constexpr Vec2 operator*(const Vec2& v, double s) { return {s * v.x, s * v.y}; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Signed area of the parallelogram spanned by (a, b).
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline Vec2 rotated(const Vec2& v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Reflection in the x axis.
constexpr Vec2 mirrored(const Vec2& v) { return {v.x, -v.y}; }

/// Relative determinant threshold below which a basis is treated as
/// degenerate.
inline constexpr double kDegenerateTol = 1e-12;

/// Two linearly independent vectors generating a lattice. Construct through
/// `Basis2::make`, which rejects non-finite or (nearly) collinear input.
class Basis2 {
public:
  static Basis2 make(const Vec2& v1, const Vec2& v2);

  const Vec2& v1() const { return v1_; }
  const Vec2& v2() const { return v2_; }
  double det() const { return cross(v1_, v2_); }

private:
  Basis2(const Vec2& v1, const Vec2& v2) : v1_(v1), v2_(v2) {}
  Vec2 v1_;
  Vec2 v2_;
};

} // namespace rootform

#endif
