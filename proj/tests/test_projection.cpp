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
#include <gtest/gtest.h>

#include <cmath>

#include "rootform/errors.hpp"
#include "rootform/metrics.hpp"
#include "rootform/projection.hpp"
#include "support.hpp"

using namespace rootform;
using namespace rootform::testing;

namespace {

double angle_between(const Vec2& a, const Vec2& b) {
  return std::acos(dot(a, b) / (a.length() * b.length()));
}

} // namespace

TEST(FullTriangle, Examples) {
  for (double a : {0.5, 1.0, 7.0}) {
    const BarycentricTriple t = to_full_triangle(RootForm::make(0, a, a));
    EXPECT_EQ(t.b12, 0.0);
    EXPECT_NEAR(t.b01, 0.5, 1e-15);
    EXPECT_NEAR(t.b02, 0.5, 1e-15);
  }
  const BarycentricTriple h = to_full_triangle(RootForm::make(2, 2, 2));
  EXPECT_NEAR(h.b12, 1.0 / 3, 1e-15);
  EXPECT_NEAR(h.b01, 1.0 / 3, 1e-15);
  EXPECT_NEAR(h.b02, 1.0 / 3, 1e-15);
  const BarycentricTriple g = to_full_triangle(RootForm::make(1, 2, 3));
  EXPECT_NEAR(g.b12, 1.0 / 6, 1e-15);
  EXPECT_NEAR(g.b01, 1.0 / 3, 1e-15);
  EXPECT_NEAR(g.b02, 0.5, 1e-15);
}

TEST(QuotientTriangle, BravaisAnchors) {
  const QTPoint sq = to_quotient_triangle(root_form(Basis2::make({1, 0}, {0, 1})));
  EXPECT_NEAR(sq.x, 0.0, 1e-12);
  EXPECT_NEAR(sq.y, 0.0, 1e-12);
  const QTPoint hex = to_quotient_triangle(root_form(Basis2::make({1, 0}, {-0.5, std::sqrt(3.0) / 2})));
  EXPECT_NEAR(hex.x, 0.0, 1e-12);
  EXPECT_NEAR(hex.y, 1.0 / 3, 1e-12);
}

TEST(QuotientTriangle, LongRectanglesApproachOpenVertex) {
  double previous = 0.0;
  for (double b : {2.0, 10.0, 1e3, 1e6, 1e12}) {
    const QTPoint p = to_quotient_triangle(RootForm::make(0, 1, b));
    EXPECT_EQ(p.y, 0.0);
    EXPECT_GT(p.x, previous);
    EXPECT_LE(p.x, 0.5);
    previous = p.x;
  }
  EXPECT_NEAR(previous, 0.5, 1e-12);
}

TEST(QuotientTriangle, SignedCoordinate) {
  const QTPoint pos = to_quotient_triangle(oriented_root_form(Basis2::make({3, 0}, {-1, 3})));
  const QTPoint neg = to_quotient_triangle(oriented_root_form(Basis2::make({3, 0}, {-2, 3})));
  EXPECT_GT(pos.x, 0.0);
  EXPECT_EQ(pos.signed_x, pos.x);
  EXPECT_EQ(neg.signed_x, -neg.x);
  EXPECT_NEAR(pos.x, neg.x, 1e-15);
  EXPECT_NEAR(pos.y, neg.y, 1e-15);
  // x = (sqrt7 - sqrt6) / 2 / (sqrt3 + sqrt6 + sqrt7).
  const double sum = std::sqrt(3.0) + std::sqrt(6.0) + std::sqrt(7.0);
  EXPECT_NEAR(pos.x, 0.5 * (std::sqrt(7.0) - std::sqrt(6.0)) / sum, 1e-14);
  EXPECT_NEAR(pos.y, std::sqrt(3.0) / sum, 1e-14);
}

TEST(QuotientTriangle, RangeAndScaleInvariance) {
  Rng rng(31);
  for (int t = 0; t < 5000; ++t) {
    const RootForm rf = random_root_form(rng);
    const QTPoint p = to_quotient_triangle(rf);
    EXPECT_GE(p.x, 0.0);
    EXPECT_LE(p.x, 0.5);
    EXPECT_GE(p.y, 0.0);
    EXPECT_LE(p.y, 1.0 / 3);

    const double s = std::pow(10.0, uniform(rng, -3, 3));
    const auto& v = rf.values();
    const QTPoint q = to_quotient_triangle(RootForm::make(s * v[0], s * v[1], s * v[2]));
    EXPECT_NEAR(q.x, p.x, 1e-14);
    EXPECT_NEAR(q.y, p.y, 1e-14);
  }
}

TEST(QuotientTriangle, HexagonalIsTheUniqueMaximiserOfY) {
  Rng rng(37);
  for (int t = 0; t < 2000; ++t) {
    const RootForm rf = random_root_form(rng);
    const bool equal = rf.values()[2] - rf.values()[0] <= 1e-9 * rf.values()[2];
    EXPECT_EQ(std::abs(to_quotient_triangle(rf).y - 1.0 / 3) <= 1e-12, equal);
  }
  for (double c : {0.1, 1.0, 4.0})
    EXPECT_NEAR(to_quotient_triangle(RootForm::make(c, c, c)).y, 1.0 / 3, 1e-15);
}

TEST(Reconstruct, Examples) {
  const ObtuseSuperbase sq = reconstruct_superbase(RootForm::make(0, 1, 1));
  EXPECT_NEAR(sq.v1().x, 1.0, 1e-15);
  EXPECT_NEAR(sq.v1().y, 0.0, 1e-15);
  EXPECT_NEAR(sq.v2().x, 0.0, 1e-15);
  EXPECT_NEAR(sq.v2().y, 1.0, 1e-15);
  EXPECT_NEAR(sq.v0().x, -1.0, 1e-15);
  EXPECT_NEAR(sq.v0().y, -1.0, 1e-15);

  const double h = 1.0 / std::sqrt(2.0);
  const ObtuseSuperbase hex = reconstruct_superbase(RootForm::make(h, h, h));
  EXPECT_NEAR(hex.v1().length(), 1.0, 1e-15);
  EXPECT_NEAR(hex.v2().length(), 1.0, 1e-15);
  EXPECT_NEAR(angle_between(hex.v1(), hex.v2()), 2.0 * std::numbers::pi / 3, 1e-12);

  const RootForm rf = RootForm::make(std::sqrt(3.0), std::sqrt(6.0), std::sqrt(7.0));
  const ObtuseSuperbase g = reconstruct_superbase(rf);
  EXPECT_LE(max_abs_diff(root_form(g).values(), rf.values()), 1e-12);
  EXPECT_LT(superbase_distance_linf(g, reduce_to_obtuse(Basis2::make({3, 0}, {-1, 3}))), 1e-8);
}

TEST(Reconstruct, ChiralityFollowsTheOrientedForm) {
  const OrientedRootForm pos = oriented_root_form(Basis2::make({3, 0}, {-1, 3}));
  const OrientedRootForm neg = oriented_root_form(Basis2::make({3, 0}, {-2, 3}));
  const ObtuseSuperbase sp = reconstruct_superbase(pos);
  const ObtuseSuperbase sn = reconstruct_superbase(neg);
  EXPECT_EQ(oriented_root_form(sp).sign(), LatticeSign::Positive);
  EXPECT_EQ(oriented_root_form(sn).sign(), LatticeSign::Negative);
  EXPECT_LE(max_abs_diff(oriented_root_form(sp).values(), pos.values()), 1e-12);
  EXPECT_LE(max_abs_diff(oriented_root_form(sn).values(), neg.values()), 1e-12);

  AlignmentOptions rot_only;
  rot_only.allow_reflection = false;
  EXPECT_LT(superbase_distance_linf(sp, reduce_to_obtuse(Basis2::make({3, 0}, {-1, 3})), rot_only),
            1e-8);
  EXPECT_LT(superbase_distance_linf(sn, reduce_to_obtuse(Basis2::make({3, 0}, {-2, 3})), rot_only),
            1e-8);

  EXPECT_LT(reconstruct_superbase(RootForm::make(1, 2, 3), LatticeSign::Negative).superbase().basis().det(),
            0.0);
}

TEST(Reconstruct, RoundTrip) {
  Rng rng(73);
  for (int t = 0; t < 2000; ++t) {
    const RootForm rf = random_root_form(rng);
    const ObtuseSuperbase s = reconstruct_superbase(rf);
    EXPECT_LE(max_abs_diff(root_form(s).values(), rf.values()), 1e-10 * max_of(rf.values()));
    EXPECT_GE(s.superbase().basis().det(), 0.0);

    const OrientedRootForm of = OrientedRootForm::make(uniform(rng, 0, 5), uniform(rng, 0, 5),
                                                       uniform(rng, 0, 5));
    const OrientedRootForm back = oriented_root_form(reconstruct_superbase(of));
    EXPECT_EQ(back.sign(), of.sign());
    EXPECT_LE(max_abs_diff(back.values(), of.values()), 1e-10 * max_of(of.values()));
  }
}

TEST(Reconstruct, ActualLatticeMatchesReconstruction) {
  Rng rng(79);
  for (int t = 0; t < 100; ++t) {
    Basis2 b = rotate(random_basis(rng), random_angle(rng));
    if (uniform_int(rng, 0, 1))
      b = mirror(b);
    const ObtuseSuperbase s = reduce_to_obtuse(b);
    EXPECT_LT(superbase_distance_linf(reconstruct_superbase(root_form(s)), s),
              1e-6 * s.superbase().max_length());
  }
}
