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
#include "rootform/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rootform/errors.hpp"

namespace rootform {

namespace detail {
struct Access {
  static Superbase2 superbase(const Vec2& v0, const Vec2& v1, const Vec2& v2) {
    return Superbase2(v0, v1, v2);
  }
  static ObtuseSuperbase obtuse(const Superbase2& s, const ConormTriple& c, int steps) {
    return ObtuseSuperbase(s, c, steps);
  }
};
} // namespace detail

namespace {

// Superbase labels (i, j) of each conorm and the remaining label k.
struct PairLabels { int i, j, k; };
constexpr PairLabels kLabels[3] = {{1, 2, 0}, {0, 1, 2}, {0, 2, 1}};

double max_of(const std::array<double, 3>& a) { return std::max({a[0], a[1], a[2]}); }

// Clamps tolerated negatives and checks that at most one conorm vanishes.
ObtuseSuperbase finish_obtuse(const Superbase2& s, double rel_neg_tol, int steps) {
  const ConormTriple raw = conorms(s);
  const double tol = rel_neg_tol * max_of(vonorms(s).as_array());
  std::array<double, 3> p = raw.as_array();
  int zeros = 0;
  for (double& x : p) {
    if (x < -tol)
      fail(ErrorKind::NegativeConorm, "superbase is not obtuse (conorm " + std::to_string(x) + ")");
    if (x <= 0.0) {
      x = 0.0;
      ++zeros;
    }
  }
  if (zeros >= 2)
    fail(ErrorKind::DegenerateLattice, "two conorms vanish");
  return detail::Access::obtuse(s, ConormTriple{p[0], p[1], p[2]}, steps);
}

} // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::IterationLimitExceeded: return "IterationLimitExceeded";
    case ErrorKind::NegativeConorm: return "NegativeConorm";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidGridSpec: return "InvalidGridSpec";
  }
  return "Error";
}

std::string_view to_string(LatticeSign s) {
  switch (s) {
    case LatticeSign::Neutral: return "neutral";
    case LatticeSign::Positive: return "positive";
    case LatticeSign::Negative: return "negative";
  }
  return "neutral";
}

Basis2 Basis2::make(const Vec2& v1, const Vec2& v2) {
  if (!v1.is_finite() || !v2.is_finite())
    fail(ErrorKind::DegenerateBasis, "basis vectors must be finite");
  const double scale = std::max(v1.length_sq(), v2.length_sq());
  if (!(std::abs(cross(v1, v2)) > kDegenerateTol * scale))
    fail(ErrorKind::DegenerateBasis, "basis vectors are linearly dependent");
  return Basis2(v1, v2);
}

Superbase2 Superbase2::make(const Vec2& v0, const Vec2& v1, const Vec2& v2) {
  Basis2::make(v1, v2);
  if (!v0.is_finite())
    fail(ErrorKind::InvalidArgument, "superbase vectors must be finite");
  const double scale = std::max({v0.length(), v1.length(), v2.length()});
  if ((v0 + v1 + v2).length() > 1e-12 * scale)
    fail(ErrorKind::InvalidArgument, "superbase vectors do not sum to zero");
  return Superbase2(v0, v1, v2);
}

double Superbase2::max_length() const {
  return std::max({v_[0].length(), v_[1].length(), v_[2].length()});
}

ObtuseSuperbase ObtuseSuperbase::from_obtuse(const Superbase2& s, double rel_neg_tol) {
  return finish_obtuse(s, rel_neg_tol, 0);
}

RootForm RootForm::make(double a, double b, double c) {
  std::array<double, 3> r{a, b, c};
  for (double x : r)
    if (!std::isfinite(x) || x < 0.0)
      fail(ErrorKind::InvalidArgument, "root products must be finite and non-negative");
  std::sort(r.begin(), r.end());
  if (r[1] == 0.0)
    fail(ErrorKind::DegenerateLattice, "two root products vanish");
  return RootForm(r);
}

OrientedRootForm OrientedRootForm::make(double a, double b, double c, double rel_sign_tol) {
  std::array<double, 3> r{a, b, c};
  for (double x : r)
    if (!std::isfinite(x) || x < 0.0)
      fail(ErrorKind::InvalidArgument, "root products must be finite and non-negative");
  const auto lo = std::min_element(r.begin(), r.end());
  std::rotate(r.begin(), lo, r.end());
  const double tol = rel_sign_tol * max_of(r);
  if (r[1] == 0.0 || r[2] == 0.0)
    fail(ErrorKind::DegenerateLattice, "two root products vanish");

  // A vanishing root product means a rectangular cell, which is mirror
  // symmetric whatever the other two entries are.
  const bool neutral = r[0] <= tol || std::abs(r[1] - r[0]) <= tol ||
                       std::abs(r[2] - r[1]) <= tol || std::abs(r[2] - r[0]) <= tol;
  if (neutral) {
    std::sort(r.begin(), r.end());
    return OrientedRootForm(r, LatticeSign::Neutral);
  }
  return OrientedRootForm(r, r[1] < r[2] ? LatticeSign::Positive : LatticeSign::Negative);
}

Superbase2 superbase_from_basis(const Basis2& b) {
  const Vec2 v0{-b.v1().x - b.v2().x, -b.v1().y - b.v2().y};
  return detail::Access::superbase(v0, b.v1(), b.v2());
}

ConormTriple conorms(const Superbase2& s) {
  return {-dot(s.v1(), s.v2()), -dot(s.v0(), s.v1()), -dot(s.v0(), s.v2())};
}

VonormTriple vonorms(const Superbase2& s) {
  return {s.v0().length_sq(), s.v1().length_sq(), s.v2().length_sq()};
}

VonormTriple vonorms_from_conorms(const ConormTriple& c) {
  return {c.p01 + c.p02, c.p01 + c.p12, c.p02 + c.p12};
}

ConormTriple conorms_from_vonorms(const VonormTriple& n, double rel_neg_tol) {
  const ConormTriple c{0.5 * (n.n1 + n.n2 - n.n0), 0.5 * (n.n0 + n.n1 - n.n2),
                       0.5 * (n.n0 + n.n2 - n.n1)};
  const double tol = rel_neg_tol * max_of(n.as_array());
  for (double p : c.as_array())
    if (p < -tol)
      fail(ErrorKind::NegativeConorm, "vonorms violate a triangle inequality");
  return c;
}

ObtuseSuperbase reduce_to_obtuse(const Superbase2& s, const ReduceOptions& opt,
                                 std::vector<ReductionStep>* trace) {
  if (opt.max_iter < 1)
    fail(ErrorKind::InvalidArgument, "max_iter must be at least 1");
  if (!(opt.rel_neg_tol >= 0.0))
    fail(ErrorKind::InvalidArgument, "negativity tolerance must be non-negative");

  std::array<Vec2, 3> v = s.vectors();
  int steps = 0;
  for (;;) {
    const Superbase2 cur = detail::Access::superbase(v[0], v[1], v[2]);
    const auto p = conorms(cur).as_array();
    const VonormTriple n = vonorms(cur);
    const double tol = opt.rel_neg_tol * max_of(n.as_array());

    // Most negative conorm, ties resolved in (12, 01, 02) order.
    int worst = 0;
    for (int q = 1; q < 3; ++q)
      if (p[q] < p[worst]) worst = q;
    if (p[worst] >= -tol)
      return finish_obtuse(cur, opt.rel_neg_tol, steps);

    if (steps == opt.max_iter)
      fail(ErrorKind::IterationLimitExceeded,
           "no obtuse superbase after " + std::to_string(opt.max_iter) + " steps");

    const auto [i, j, k] = kLabels[worst];
    v[i] = -v[i];
    v[k] = -(v[i] + v[j]);
    ++steps;

    if (trace) {
      const double after = v[0].length_sq() + v[1].length_sq() + v[2].length_sq();
      trace->push_back({static_cast<ConormPair>(worst), -p[worst], n.sum(), after});
    }
  }
}

ObtuseSuperbase reduce_to_obtuse(const Basis2& b, const ReduceOptions& opt) {
  return reduce_to_obtuse(superbase_from_basis(b), opt);
}

RootForm root_form(const ObtuseSuperbase& s) {
  const ConormTriple& c = s.conorms();
  return RootForm::make(std::sqrt(c.p12), std::sqrt(c.p01), std::sqrt(c.p02));
}

RootForm root_form(const Basis2& b, const ReduceOptions& opt) {
  return root_form(reduce_to_obtuse(b, opt));
}

OrientedRootForm oriented_root_form(const ObtuseSuperbase& s, double rel_sign_tol) {
  ConormTriple c = s.conorms();
  // det(v1, v2) = det(v2, v0) = det(v0, v1), so one test fixes the cyclic
  // orientation of the whole superbase. Relabelling v1 <-> v2 makes it
  // positive and exchanges p01 with p02.
  if (cross(s.v1(), s.v2()) < 0.0)
    std::swap(c.p01, c.p02);
  return OrientedRootForm::make(std::sqrt(c.p12), std::sqrt(c.p01), std::sqrt(c.p02),
                                rel_sign_tol);
}

OrientedRootForm oriented_root_form(const Basis2& b, const ReduceOptions& opt,
                                    double rel_sign_tol) {
  return oriented_root_form(reduce_to_obtuse(b, opt), rel_sign_tol);
}

double squared_norm_from_conorms(const ConormTriple& c, long c1, long c2) {
  const double a = static_cast<double>(c1), b = static_cast<double>(c2);
  const double d = static_cast<double>(c1 - c2);
  return a * a * c.p01 + b * b * c.p02 + d * d * c.p12;
}

} // namespace rootform
