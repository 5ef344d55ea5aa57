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

// Superbases of 2D lattices, their reduction to obtuse form and the
// isometry invariants read off an obtuse superbase: vonorms, conorms,
// root forms (unsigned and oriented) and the chirality sign.
//
// Index conventions follow the superbase labels 0,1,2: the conorm p_ij is
// minus the scalar product of v_i and v_j, and the vonorm n_i is |v_i|^2.
// With v0 = -v1 - v2 the two families are linked by
//   n0 = p01 + p02,  n1 = p01 + p12,  n2 = p02 + p12.

#ifndef ROOTFORM_LATTICE_HPP_
#define ROOTFORM_LATTICE_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "rootform/vec2.hpp"

namespace rootform {

namespace detail {
struct Access;
}

/// Conorms in (p12, p01, p02) order, units of squared length.
struct ConormTriple {
  double p12 = 0.0;
  double p01 = 0.0;
  double p02 = 0.0;

  std::array<double, 3> as_array() const { return {p12, p01, p02}; }
  friend bool operator==(const ConormTriple&, const ConormTriple&) = default;
};

/// Vonorms (squared lengths of v0, v1, v2).
struct VonormTriple {
  double n0 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;

  std::array<double, 3> as_array() const { return {n0, n1, n2}; }
  double sum() const { return n0 + n1 + n2; }
  friend bool operator==(const VonormTriple&, const VonormTriple&) = default;
};

enum class ConormPair { P12, P01, P02 };

/// Three lattice vectors summing to zero, the last two forming a basis.
class Superbase2 {
public:
  /// Validates independence of v1, v2 and that the three vectors sum to
  /// zero up to a relative tolerance.
  static Superbase2 make(const Vec2& v0, const Vec2& v1, const Vec2& v2);

  const Vec2& v0() const { return v_[0]; }
  const Vec2& v1() const { return v_[1]; }
  const Vec2& v2() const { return v_[2]; }
  const Vec2& operator[](std::size_t i) const { return v_[i]; }
  const std::array<Vec2, 3>& vectors() const { return v_; }

  Basis2 basis() const { return Basis2::make(v_[1], v_[2]); }
  double max_length() const;

private:
  friend struct detail::Access;
  Superbase2(const Vec2& v0, const Vec2& v1, const Vec2& v2) : v_{v0, v1, v2} {}
  std::array<Vec2, 3> v_;
};

/// An obtuse superbase: all conorms non-negative. Conorms within the
/// negativity tolerance of zero are stored clamped to 0.
class ObtuseSuperbase {
public:
  /// Wraps an already obtuse superbase, throwing NegativeConorm otherwise.
  static ObtuseSuperbase from_obtuse(const Superbase2& s, double rel_neg_tol = 1e-10);

  const Superbase2& superbase() const { return sb_; }
  const Vec2& v0() const { return sb_.v0(); }
  const Vec2& v1() const { return sb_.v1(); }
  const Vec2& v2() const { return sb_.v2(); }
  const Vec2& operator[](std::size_t i) const { return sb_[i]; }
  const ConormTriple& conorms() const { return conorms_; }
  int reduction_steps() const { return steps_; }

private:
  friend struct detail::Access;
  ObtuseSuperbase(const Superbase2& s, const ConormTriple& c, int steps)
    : sb_(s), conorms_(c), steps_(steps) {}
  Superbase2 sb_;
  ConormTriple conorms_;
  int steps_ = 0;
};

/// Ascending triple of root products r12 <= r01 <= r02 (lengths). This is a
/// complete isometry invariant of a 2D lattice.
class RootForm {
public:
  /// Sorts the three entries; rejects negative or non-finite entries and
  /// throws DegenerateLattice if two of them vanish.
  static RootForm make(double a, double b, double c);

  double r12() const { return r_[0]; }
  double r01() const { return r_[1]; }
  double r02() const { return r_[2]; }
  const std::array<double, 3>& values() const { return r_; }
  double sum() const { return r_[0] + r_[1] + r_[2]; }

  friend bool operator==(const RootForm&, const RootForm&) = default;

private:
  explicit RootForm(const std::array<double, 3>& r) : r_(r) {}
  std::array<double, 3> r_;
};

enum class LatticeSign { Neutral, Positive, Negative };

std::string_view to_string(LatticeSign s);

/// Relative tolerance (on the largest root product) for deciding that two
/// root products coincide.
inline constexpr double kSignTol = 1e-8;

/// Root products in the cyclic order of a positively oriented obtuse
/// superbase, rotated so that the smallest comes first. Neutral triples are
/// stored fully sorted.
class OrientedRootForm {
public:
  /// Canonicalises (a, b, c), taken as a cyclic order, by rotation only;
  /// neutral triples are sorted ascending.
  static OrientedRootForm make(double a, double b, double c, double rel_sign_tol = kSignTol);

  double first() const { return r_[0]; }
  double second() const { return r_[1]; }
  double third() const { return r_[2]; }
  const std::array<double, 3>& values() const { return r_; }

  LatticeSign sign() const { return sign_; }

  /// Forgets orientation.
  RootForm unsigned_form() const { return RootForm::make(r_[0], r_[1], r_[2]); }

  friend bool operator==(const OrientedRootForm&, const OrientedRootForm&) = default;

private:
  OrientedRootForm(const std::array<double, 3>& r, LatticeSign s) : r_(r), sign_(s) {}
  std::array<double, 3> r_;
  LatticeSign sign_ = LatticeSign::Neutral;
};

struct ReduceOptions {
  /// A conorm is negative only below -rel_neg_tol * max vonorm.
  double rel_neg_tol = 1e-10;
  int max_iter = 1000;
};

/// One sign-flip step of the reduction.
struct ReductionStep {
  ConormPair pair;
  double epsilon;            // the flipped conorm was -epsilon
  double vonorm_sum_before;
  double vonorm_sum_after;
};

Superbase2 superbase_from_basis(const Basis2& b);

/// (-v1.v2, -v0.v1, -v0.v2); negative entries are possible for a
/// non-obtuse superbase.
ConormTriple conorms(const Superbase2& s);

/// Squared lengths computed directly from the vectors.
VonormTriple vonorms(const Superbase2& s);

VonormTriple vonorms_from_conorms(const ConormTriple& c);

/// Inverse of vonorms_from_conorms. Throws NegativeConorm when a resulting
/// conorm is below -rel_neg_tol * max vonorm (triangle inequality violated).
ConormTriple conorms_from_vonorms(const VonormTriple& n, double rel_neg_tol = 1e-10);

/// Repeatedly flips the most negative conorm until the superbase is obtuse.
/// Each step on pair (i, j) with p_ij = -eps replaces (v_i, v_j, v_k) by
/// (-v_i, v_j, v_i - v_j), lowering the vonorm of v_k by 4 eps. Throws
/// IterationLimitExceeded after more than max_iter steps. When `trace` is
/// given, every step is appended to it.
ObtuseSuperbase reduce_to_obtuse(const Superbase2& s, const ReduceOptions& opt = {},
                                 std::vector<ReductionStep>* trace = nullptr);

ObtuseSuperbase reduce_to_obtuse(const Basis2& b, const ReduceOptions& opt = {});

RootForm root_form(const ObtuseSuperbase& s);
RootForm root_form(const Basis2& b, const ReduceOptions& opt = {});

OrientedRootForm oriented_root_form(const ObtuseSuperbase& s, double rel_sign_tol = kSignTol);
OrientedRootForm oriented_root_form(const Basis2& b, const ReduceOptions& opt = {},
                                    double rel_sign_tol = kSignTol);

/// |c1 v1 + c2 v2|^2 from the conorms alone:
///   c1^2 p01 + c2^2 p02 + (c1 - c2)^2 p12.
double squared_norm_from_conorms(const ConormTriple& c, long c1, long c2);

} // namespace rootform

#endif
