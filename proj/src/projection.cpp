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
#include "rootform/projection.hpp"

#include <algorithm>
#include <cmath>

#include "rootform/errors.hpp"

namespace rootform {

namespace {

// Superbase with conorms p12 = a^2, p01 = b^2, p02 = c^2, v1 on the +x axis.
ObtuseSuperbase place(double a, double b, double c, bool clockwise) {
  const double p12 = a * a, p01 = b * b, p02 = c * c;
  const double n1 = p01 + p12;
  if (!(n1 > 0.0) || !(p02 + p12 > 0.0) || !(p01 + p02 > 0.0))
    fail(ErrorKind::DegenerateLattice, "reconstructed vector has zero length");
  const double len1 = std::sqrt(n1);
  // |v1|^2 |v2|^2 - (v1.v2)^2 expanded so that no cancellation occurs.
  const double area_sq = p01 * p02 + p12 * (p01 + p02);
  const Vec2 v1{len1, 0.0};
  Vec2 v2{-p12 / len1, std::sqrt(area_sq) / len1};
  if (clockwise)
    v2.y = -v2.y;
  const Vec2 v0{-v1.x - v2.x, -v2.y};
  return ObtuseSuperbase::from_obtuse(Superbase2::make(v0, v1, v2));
}

} // namespace

BarycentricTriple to_full_triangle(const RootForm& rf) {
  const double s = rf.sum();
  if (!(s > 0.0))
    fail(ErrorKind::DegenerateLattice, "root products sum to zero");
  return {rf.r12() / s, rf.r01() / s, rf.r02() / s};
}

QTPoint to_quotient_triangle(const RootForm& rf) {
  const BarycentricTriple b = to_full_triangle(rf);
  const double x = std::clamp(0.5 * (b.b02 - b.b01), 0.0, 0.5);
  const double y = std::clamp(b.b12, 0.0, 1.0 / 3.0);
  return {x, y, x};
}

QTPoint to_quotient_triangle(const OrientedRootForm& rf) {
  QTPoint p = to_quotient_triangle(rf.unsigned_form());
  if (rf.sign() == LatticeSign::Negative)
    p.signed_x = -p.x;
  return p;
}

ObtuseSuperbase reconstruct_superbase(const RootForm& rf, LatticeSign sign) {
  return place(rf.r12(), rf.r01(), rf.r02(), sign == LatticeSign::Negative);
}

ObtuseSuperbase reconstruct_superbase(const OrientedRootForm& rf) {
  return place(rf.first(), rf.second(), rf.third(), false);
}

} // namespace rootform
