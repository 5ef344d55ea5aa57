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
#ifndef ROOTFORM_PROJECTION_HPP_
#define ROOTFORM_PROJECTION_HPP_

#include "rootform/lattice.hpp"

namespace rootform {

/// Root products scaled to unit sum, in (12, 01, 02) order.
struct BarycentricTriple {
  double b12 = 0.0;
  double b01 = 0.0;
  double b02 = 0.0;
};

/// Scale-free shape coordinates. x in [0, 1/2], y in [0, 1/3]; signed_x
/// equals -x for negative lattices and x otherwise.
struct QTPoint {
  double x = 0.0;
  double y = 0.0;
  double signed_x = 0.0;
};

BarycentricTriple to_full_triangle(const RootForm& rf);

/// x = (b02 - b01) / 2, y = b12.
QTPoint to_quotient_triangle(const RootForm& rf);
QTPoint to_quotient_triangle(const OrientedRootForm& rf);

/// Canonical obtuse superbase with the given root form: v1 along +x, v2 at
/// the obtuse angle from v1, counterclockwise unless `sign` is Negative.
ObtuseSuperbase reconstruct_superbase(const RootForm& rf,
                                      LatticeSign sign = LatticeSign::Positive);

/// Same, reading (first, second, third) as (r12, r01, r02) of a positively
/// oriented superbase, so the result has the chirality of `rf`.
ObtuseSuperbase reconstruct_superbase(const OrientedRootForm& rf);

} // namespace rootform

#endif
