// Copyright 2026 The Invisibility Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INVIS_RIGID_BODY_H_
#define INVIS_RIGID_BODY_H_

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "invis/linalg_core.h"

namespace invis::body {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Positions within this fraction of the body's largest radius are one site.
inline constexpr double kMergeRelTolerance = 1e-9;

struct PointMass {
  double mass = 0.0;
  Vec3 position = Vec3::Zero();
};

// Signed point masses. Negative masses are allowed; use physical() to test
// realizability.
class PointMassSet {
 public:
  PointMassSet() = default;
  explicit PointMassSet(std::vector<PointMass> points);

  const std::vector<PointMass>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  // All masses >= 0 and total mass > 0.
  bool physical() const;
  double total_abs_mass() const;
  // Largest |x_j|; 0 for an empty body.
  double max_radius() const;

  PointMassSet scaled(double coefficient) const;
  PointMassSet translated(const Vec3& offset) const;
  PointMassSet negated() const { return scaled(-1.0); }
  PointMassSet joined(const PointMassSet& other) const;

 private:
  std::vector<PointMass> points_;
};

// Center of mass and CM-referred inertia are absent when the total mass
// vanishes relative to sum |m_j|.
struct MechanicalSummary {
  double total_mass = 0.0;
  Vec3 mass_dipole = Vec3::Zero();
  std::optional<Vec3> center_of_mass;
  Mat3 inertia_origin = Mat3::Zero();
  std::optional<Mat3> inertia_cm;
};

// Moment sums divided by their natural scales: |sum m| / S,
// |sum m x| / (S r), |I| / (S r^2), with S = sum |m| and r = max |x|.
// Zero scales give zero residuals.
struct InvisibilityResiduals {
  double mass = 0.0;
  double dipole = 0.0;
  double inertia = 0.0;
};

// Orthogonal 3x3 matrix, proper or improper.
class Rotation3 {
 public:
  // Throws kInvalidInput unless R^T R = I within 1e-10.
  explicit Rotation3(const Mat3& matrix);

  static Rotation3 identity() { return Rotation3(Mat3::Identity()); }
  static Rotation3 about_axis(const Vec3& axis, double angle_rad);
  // Reflection through the plane with the given normal.
  static Rotation3 reflection(const Vec3& normal);

  const Mat3& matrix() const { return matrix_; }
  bool proper() const { return matrix_.determinant() > 0.0; }

 private:
  Mat3 matrix_;
};

MechanicalSummary summary(const PointMassSet& body, const Tolerance& tol = {});
InvisibilityResiduals invisibility_residuals(const PointMassSet& body);

// Zero total mass, mass dipole and inertia about the origin, with thresholds
// tol applied to the scaled residuals.
bool is_invisible(const PointMassSet& body, const Tolerance& tol = {});

// {(m_j, x_j)} + {(-m_j, -x_j)}. Requires the CM at the origin.
PointMassSet parity_construction(const PointMassSet& body, const Tolerance& tol = {});

// {(m_j, x_j)} + {(-m_j, R x_j)}. Requires the CM at the origin and an
// isotropic inertia tensor.
PointMassSet rotation_construction(const PointMassSet& body, const Rotation3& rotation,
                                   const Tolerance& tol = {});

// a + negated(b) for two CM-centred bodies with matching mass and inertia.
PointMassSet generalized_rotation_construction(const PointMassSet& a, const PointMassSet& b,
                                               const Tolerance& tol = {});

struct WeightedBody {
  double coefficient = 1.0;
  PointMassSet body;
};

// Sum of scaled bodies with coincident sites merged and cancelled sites dropped.
PointMassSet superpose(std::span<const WeightedBody> terms);

// Merge coincident sites (kMergeRelTolerance) and drop sites whose mass
// cancels.
PointMassSet merged(const PointMassSet& body);

// Same total mass, CM, and CM-referred inertia. Both bodies must be physical.
bool are_equivalent(const PointMassSet& a, const PointMassSet& b, const Tolerance& tol = {});

// Range of lambda for which base + lambda * invisible stays physical.
FeasibleInterval equivalent_family(const PointMassSet& base, const PointMassSet& invisible,
                                   const Tolerance& tol = {});
PointMassSet family_member(const PointMassSet& base, const PointMassSet& invisible,
                           double lambda);

enum class PlatonicSolid { kTetrahedron, kCube, kOctahedron };

PointMassSet platonic_fixture(PlatonicSolid kind, double mass, double scale);

// Masses m, m l1/l2 at l1 z, -l2 z together with their parity images.
PointMassSet minimal_invisible_body(double m, double l1, double l2);

}  // namespace invis::body

#endif  // INVIS_RIGID_BODY_H_
