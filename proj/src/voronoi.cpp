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
#include "rootform/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rootform/errors.hpp"

namespace rootform {

namespace {

struct Combo {
  Vec2 w;
  long a = 0, b = 0;  // w = a v1 + b v2
};

// Lagrange-Gauss reduction, tracking integer coefficients.
std::pair<Combo, Combo> gauss_reduce(const Basis2& basis) {
  Combo p{basis.v1(), 1, 0}, q{basis.v2(), 0, 1};
  for (int iter = 0; iter < 10000; ++iter) {
    if (p.w.length_sq() > q.w.length_sq())
      std::swap(p, q);
    const double mu = std::round(dot(p.w, q.w) / p.w.length_sq());
    if (mu == 0.0)
      return {p, q};
    const long m = static_cast<long>(mu);
    q.w -= mu * p.w;
    q.a -= m * p.a;
    q.b -= m * p.b;
    if (q.w.length_sq() >= p.w.length_sq())
      return {p, q};
  }
  fail(ErrorKind::IterationLimitExceeded, "Gauss reduction did not converge");
}

double polar_angle(const Vec2& v) {
  const double a = std::atan2(v.y, v.x);
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

bool lengths_tied(double a, double b) {
  return std::abs(a - b) < kVoronoiTieTol * std::max(a, b);
}

// Keeps the part of a convex polygon with p.n <= c.
std::vector<Vec2> clip(const std::vector<Vec2>& poly, const Vec2& n, double c) {
  std::vector<Vec2> out;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % m];
    const double da = dot(a, n) - c, db = dot(b, n) - c;
    if (da <= 0.0)
      out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

} // namespace

double VoronoiDomainPolygon::area() const {
  double s = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    s += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  return 0.5 * s;
}

std::vector<VoronoiVector> voronoi_vectors(const Basis2& b, double search_radius_factor) {
  if (!(search_radius_factor >= 2.0))
    fail(ErrorKind::InvalidArgument, "search radius factor must be at least 2");
  const auto [p, q] = gauss_reduce(b);
  const double radius = search_radius_factor * std::max(p.w.length(), q.w.length());
  const double det = std::abs(cross(p.w, q.w));
  // Cramer's rule bounds the coefficients of any vector inside the disc.
  const long m1 = static_cast<long>(radius * q.w.length() / det) + 1;
  const long m2 = static_cast<long>(radius * p.w.length() / det) + 1;

  struct Candidate {
    VoronoiVector vv;
    double len;
  };
  std::vector<Candidate> classes[3];
  for (long i = -m1; i <= m1; ++i) {
    for (long j = -m2; j <= m2; ++j) {
      if (i == 0 && j == 0)
        continue;
      const int parity = static_cast<int>((i & 1) | ((j & 1) << 1));  // 1, 2 or 3
      if (parity == 0)
        continue;  // a doubled vector, never shortest in the zero class
      VoronoiVector vv;
      vv.c1 = i * p.a + j * q.a;
      vv.c2 = i * p.b + j * q.b;
      vv.vector = static_cast<double>(vv.c1) * b.v1() + static_cast<double>(vv.c2) * b.v2();
      const double len = vv.vector.length();
      if (len <= radius)
        classes[parity - 1].push_back({vv, len});
    }
  }

  std::vector<VoronoiVector> out;
  for (auto& cls : classes) {
    double shortest = std::numeric_limits<double>::infinity();
    for (const Candidate& c : cls)
      shortest = std::min(shortest, c.len);
    std::vector<VoronoiVector> best;
    for (const Candidate& c : cls)
      if (lengths_tied(c.len, shortest))
        best.push_back(c.vv);
    const bool strict = best.size() == 2;
    std::sort(best.begin(), best.end(), [](const VoronoiVector& x, const VoronoiVector& y) {
      return polar_angle(x.vector) < polar_angle(y.vector);
    });
    for (VoronoiVector& vv : best) {
      vv.strict = strict;
      out.push_back(vv);
    }
  }
  return out;
}

VoronoiDomainPolygon voronoi_domain(const Basis2& b) {
  const std::vector<VoronoiVector> vv = voronoi_vectors(b);
  double reach = 0.0;
  for (const VoronoiVector& v : vv)
    reach = std::max(reach, v.vector.length());

  std::vector<Vec2> poly{{-reach, -reach}, {reach, -reach}, {reach, reach}, {-reach, reach}};
  for (const VoronoiVector& v : vv)
    poly = clip(poly, v.vector, 0.5 * v.vector.length_sq());

  // Half-planes touching a vertex (non-strict vectors) leave duplicates.
  const double eps = 1e-12 * reach;
  std::vector<Vec2> clean;
  for (const Vec2& x : poly)
    if (clean.empty() || (x - clean.back()).length() > eps)
      clean.push_back(x);
  if (clean.size() > 1 && (clean.front() - clean.back()).length() <= eps)
    clean.pop_back();
  std::vector<Vec2> verts;
  const std::size_t m = clean.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& prev = clean[(i + m - 1) % m];
    const Vec2& next = clean[(i + 1) % m];
    if (std::abs(cross(clean[i] - prev, next - clean[i])) > eps * reach)
      verts.push_back(clean[i]);
  }

  const auto first = std::min_element(verts.begin(), verts.end(), [](const Vec2& x, const Vec2& y) {
    return polar_angle(x) < polar_angle(y);
  });
  std::rotate(verts.begin(), first, verts.end());
  return {verts};
}

bool verify_partial_sums(const Superbase2& s) {
  const std::vector<VoronoiVector> vv = voronoi_vectors(s.basis());
  const double eps = kVoronoiTieTol * s.max_length();
  for (int i = 0; i < 3; ++i) {
    const Vec2& vj = s[(i + 1) % 3];
    const Vec2& vk = s[(i + 2) % 3];
    // p_jk = 0 exactly when v_j - v_k is as short as v_i = -(v_j + v_k).
    const bool expect_strict = !lengths_tied((vj - vk).length(), s[i].length());
    for (const Vec2 target : {s[i], -s[i]}) {
      const auto hit = std::find_if(vv.begin(), vv.end(), [&](const VoronoiVector& v) {
        return (v.vector - target).length() <= eps;
      });
      if (hit == vv.end() || hit->strict != expect_strict)
        return false;
    }
  }
  return true;
}

bool verify_partial_sums(const ObtuseSuperbase& s) {
  return verify_partial_sums(s.superbase());
}

} // namespace rootform
