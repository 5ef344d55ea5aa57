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

// Brute-force Voronoi vectors and Voronoi domain of a 2D lattice. Nothing
// here relies on superbase reduction: lattice vectors are enumerated in a
// disc and a vector is Voronoi iff it is a shortest member of its class
// modulo the doubled lattice. This makes the module an independent check
// on lattice.hpp.

#ifndef ROOTFORM_VORONOI_HPP_
#define ROOTFORM_VORONOI_HPP_

#include <vector>

#include "rootform/lattice.hpp"

namespace rootform {

struct VoronoiVector {
  long c1 = 0;  // coefficients in the input basis
  long c2 = 0;
  Vec2 vector;
  bool strict = false;  // +-vector are the only shortest in their class
};

struct VoronoiDomainPolygon {
  std::vector<Vec2> vertices;  // counterclockwise, starting nearest angle 0

  double area() const;
};

/// Lengths closer than this (relative) count as equal.
inline constexpr double kVoronoiTieTol = 1e-9;

/// All shortest vectors of the three nonzero classes of L / 2L, both signs,
/// ordered by class (v1, v2, v1 + v2 parity in the Gauss-reduced basis) and
/// then by angle. `search_radius_factor` (>= 2) scales the enumeration
/// radius relative to the longer Gauss-reduced basis vector.
std::vector<VoronoiVector> voronoi_vectors(const Basis2& b, double search_radius_factor = 4.0);

/// Intersection of the half-planes p.v <= v^2 / 2 over all Voronoi vectors.
VoronoiDomainPolygon voronoi_domain(const Basis2& b);

/// True iff +-v0, +-v1, +-v2 are all Voronoi vectors of the lattice of s and
/// each is strict exactly when the conorm of the other two labels is
/// positive.
bool verify_partial_sums(const Superbase2& s);
bool verify_partial_sums(const ObtuseSuperbase& s);

} // namespace rootform

#endif
