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
#ifndef ROOTFORM_METRICS_HPP_
#define ROOTFORM_METRICS_HPP_

#include <array>
#include <cmath>
#include <limits>
#include <string_view>

#include "rootform/lattice.hpp"

namespace rootform {

/// Exponent q of the Minkowski L_q norm, q in [1, +inf].
class MinkowskiOrder {
public:
  explicit MinkowskiOrder(double q);
  static MinkowskiOrder infinity() { return MinkowskiOrder(std::numeric_limits<double>::infinity()); }
  /// Accepts a decimal number or "inf" / "infinity".
  static MinkowskiOrder parse(std::string_view text);

  double q() const { return q_; }
  bool is_infinite() const { return std::isinf(q_); }

private:
  double q_;
};

/// L_q distance between two points of R^3.
double lq_distance(const std::array<double, 3>& a, const std::array<double, 3>& b,
                   MinkowskiOrder q);

/// Root metric: L_q distance minimised over all six permutations of the
/// entries of `b`.
double root_metric(const RootForm& a, const RootForm& b, MinkowskiOrder q);

/// Orientation-preserving root metric: minimum over the three cyclic
/// permutations only.
double root_metric_oriented(const OrientedRootForm& a, const OrientedRootForm& b,
                            MinkowskiOrder q);

struct AlignmentOptions {
  int samples = 720;           // coarse angle grid, at least 8
  double angle_tol = 1e-10;    // golden-section bracket width (radians)
  bool allow_reflection = true;
};

/// Approximates min over orthogonal maps R (rotations only when reflections
/// are disallowed) and over relabellings of the second superbase of
/// max_i |R(u_i) - v_i|. The rotation angle is located on a grid and then
/// refined by golden-section search, so the result is an upper bound of the
/// exact minimum that is tight to about angle_tol times the vector lengths.
double superbase_distance_linf(const ObtuseSuperbase& b, const ObtuseSuperbase& b2,
                               const AlignmentOptions& opt = {});

/// 3^(1/q) sqrt(2 l delta), with 3^(1/inf) = 1: the upper bound on the
/// root metric between obtuse superbases whose vectors are at most l long
/// and pairwise within delta.
double continuity_bound(double l, double delta, MinkowskiOrder q);

} // namespace rootform

#endif
