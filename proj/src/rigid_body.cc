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

#include "invis/rigid_body.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "invis/error.h"
#include "invis/kernels.h"

namespace invis::body {
namespace {

struct SoA {
  std::vector<double> m, x, y, z;

  explicit SoA(const PointMassSet& body) {
    const std::size_t n = body.size();
    m.reserve(n);
    x.reserve(n);
    y.reserve(n);
    z.reserve(n);
    for (const auto& p : body.points()) {
      m.push_back(p.mass);
      x.push_back(p.position.x());
      y.push_back(p.position.y());
      z.push_back(p.position.z());
    }
  }

  kernels::MassMoments moments(const Vec3& origin) const {
    return kernels::mass_moments({m, x, y, z}, {origin.x(), origin.y(), origin.z()});
  }
};

Mat3 inertia_from(const kernels::MassMoments& mm) {
  const auto& s = mm.second;
  Mat3 second;
  second << s[0], s[3], s[4],
            s[3], s[1], s[5],
            s[4], s[5], s[2];
  return (s[0] + s[1] + s[2]) * Mat3::Identity() - second;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void require_centered(const PointMassSet& body, const Tolerance& tol, const char* label) {
  const MechanicalSummary s = summary(body, tol);
  const double scale = body.total_abs_mass() * body.max_radius();
  const double dipole = s.mass_dipole.norm();
  if (dipole > tol.threshold(scale)) {
    throw_precondition("center_of_mass_at_origin",
                       std::string(label) + " center of mass is not at the origin (|sum m x| = " +
                           fmt(dipole) + ")");
  }
}

double inertia_scale(const PointMassSet& body) {
  const double r = body.max_radius();
  return body.total_abs_mass() * r * r;
}

}  // namespace

PointMassSet::PointMassSet(std::vector<PointMass> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (!std::isfinite(p.mass) || !p.position.allFinite()) {
      throw_invalid("point mass set has non-finite entries");
    }
  }
}

bool PointMassSet::physical() const {
  double total = 0.0;
  for (const auto& p : points_) {
    if (p.mass < 0.0) return false;
    total += p.mass;
  }
  return total > 0.0;
}

double PointMassSet::total_abs_mass() const {
  double s = 0.0;
  for (const auto& p : points_) s += std::abs(p.mass);
  return s;
}

double PointMassSet::max_radius() const {
  double r = 0.0;
  for (const auto& p : points_) r = std::max(r, p.position.norm());
  return r;
}

PointMassSet PointMassSet::scaled(double coefficient) const {
  std::vector<PointMass> out = points_;
  for (auto& p : out) p.mass *= coefficient;
  return PointMassSet(std::move(out));
}

PointMassSet PointMassSet::translated(const Vec3& offset) const {
  std::vector<PointMass> out = points_;
  for (auto& p : out) p.position += offset;
  return PointMassSet(std::move(out));
}

PointMassSet PointMassSet::joined(const PointMassSet& other) const {
  std::vector<PointMass> out = points_;
  out.insert(out.end(), other.points_.begin(), other.points_.end());
  return PointMassSet(std::move(out));
}

Rotation3::Rotation3(const Mat3& matrix) : matrix_(matrix) {
  if (!matrix_.allFinite()) throw_invalid("rotation has non-finite entries");
  const double deviation = (matrix_.transpose() * matrix_ - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (deviation > 1e-10) {
    throw_invalid("rotation matrix is not orthogonal (|R^T R - I| = " + fmt(deviation) + ")");
  }
}

Rotation3 Rotation3::about_axis(const Vec3& axis, double angle_rad) {
  if (!(axis.norm() > 0.0)) throw_invalid("rotation axis must be nonzero");
  return Rotation3(Eigen::AngleAxisd(angle_rad, axis.normalized()).toRotationMatrix());
}

Rotation3 Rotation3::reflection(const Vec3& normal) {
  if (!(normal.norm() > 0.0)) throw_invalid("reflection normal must be nonzero");
  const Vec3 n = normal.normalized();
  return Rotation3(Mat3::Identity() - 2.0 * n * n.transpose());
}

MechanicalSummary summary(const PointMassSet& body, const Tolerance& tol) {
  tol.validate();
  const SoA soa(body);
  const kernels::MassMoments about_origin = soa.moments(Vec3::Zero());

  MechanicalSummary s;
  s.total_mass = about_origin.mass;
  s.mass_dipole = Vec3(about_origin.first[0], about_origin.first[1], about_origin.first[2]);
  s.inertia_origin = inertia_from(about_origin);
  if (std::abs(s.total_mass) > tol.threshold(body.total_abs_mass())) {
    const Vec3 cm = s.mass_dipole / s.total_mass;
    s.center_of_mass = cm;
    s.inertia_cm = inertia_from(soa.moments(cm));
  }
  return s;
}

InvisibilityResiduals invisibility_residuals(const PointMassSet& body) {
  const MechanicalSummary s = summary(body);
  const double mass_scale = body.total_abs_mass();
  const double r = body.max_radius();
  InvisibilityResiduals out;
  if (mass_scale > 0.0) out.mass = std::abs(s.total_mass) / mass_scale;
  if (mass_scale * r > 0.0) out.dipole = s.mass_dipole.norm() / (mass_scale * r);
  if (mass_scale * r * r > 0.0) out.inertia = s.inertia_origin.norm() / (mass_scale * r * r);
  return out;
}

bool is_invisible(const PointMassSet& body, const Tolerance& tol) {
  const MechanicalSummary s = summary(body, tol);
  const double mass_scale = body.total_abs_mass();
  const double r = body.max_radius();
  return std::abs(s.total_mass) <= tol.threshold(mass_scale) &&
         s.mass_dipole.norm() <= tol.threshold(mass_scale * r) &&
         s.inertia_origin.norm() <= tol.threshold(mass_scale * r * r);
}

PointMassSet parity_construction(const PointMassSet& body, const Tolerance& tol) {
  require_centered(body, tol, "body");
  std::vector<PointMass> out = body.points();
  for (const auto& p : body.points()) out.push_back({-p.mass, -p.position});
  return PointMassSet(std::move(out));
}

PointMassSet rotation_construction(const PointMassSet& body, const Rotation3& rotation,
                                   const Tolerance& tol) {
  require_centered(body, tol, "body");
  const Mat3 inertia = summary(body, tol).inertia_origin;
  const double trace = inertia.trace();
  const double anisotropy = (inertia - (trace / 3.0) * Mat3::Identity()).norm();
  if (anisotropy > tol.threshold(std::abs(trace))) {
    throw_precondition("isotropic_inertia",
                       "inertia tensor is not proportional to the identity (|I - tr(I)/3| = " +
                           fmt(anisotropy) + ", tr(I) = " + fmt(trace) + ")");
  }
  std::vector<PointMass> out = body.points();
  for (const auto& p : body.points()) out.push_back({-p.mass, rotation.matrix() * p.position});
  return PointMassSet(std::move(out));
}

PointMassSet generalized_rotation_construction(const PointMassSet& a, const PointMassSet& b,
                                               const Tolerance& tol) {
  require_centered(a, tol, "first body");
  require_centered(b, tol, "second body");
  const MechanicalSummary sa = summary(a, tol);
  const MechanicalSummary sb = summary(b, tol);

  const double mass_scale = std::max(a.total_abs_mass(), b.total_abs_mass());
  const double mass_gap = std::abs(sa.total_mass - sb.total_mass);
  if (mass_gap > tol.threshold(mass_scale)) {
    throw_precondition("equal_total_mass", "total masses differ (" + fmt(sa.total_mass) + " vs " +
                                               fmt(sb.total_mass) + ")");
  }
  const double inertia_gap = (sa.inertia_origin - sb.inertia_origin).norm();
  if (inertia_gap > tol.threshold(std::max(inertia_scale(a), inertia_scale(b)))) {
    throw_precondition("equal_inertia",
                       "inertia tensors differ (|I_a - I_b| = " + fmt(inertia_gap) + ")");
  }
  return a.joined(b.negated());
}

PointMassSet merged(const PointMassSet& body) {
  const double eps = kMergeRelTolerance * body.max_radius();
  std::vector<PointMass> sites;
  std::vector<double> magnitude;
  for (const auto& p : body.points()) {
    auto it = std::find_if(sites.begin(), sites.end(), [&](const PointMass& s) {
      return (s.position - p.position).norm() <= eps;
    });
    if (it == sites.end()) {
      sites.push_back(p);
      magnitude.push_back(std::abs(p.mass));
    } else {
      it->mass += p.mass;
      magnitude[static_cast<std::size_t>(it - sites.begin())] += std::abs(p.mass);
    }
  }
  std::vector<PointMass> out;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (std::abs(sites[i].mass) > 1e-12 * magnitude[i]) out.push_back(sites[i]);
  }
  return PointMassSet(std::move(out));
}

PointMassSet superpose(std::span<const WeightedBody> terms) {
  std::vector<PointMass> all;
  for (const auto& term : terms) {
    if (!std::isfinite(term.coefficient)) throw_invalid("superposition coefficient is not finite");
    for (const auto& p : term.body.points()) all.push_back({term.coefficient * p.mass, p.position});
  }
  return merged(PointMassSet(std::move(all)));
}

bool are_equivalent(const PointMassSet& a, const PointMassSet& b, const Tolerance& tol) {
  if (!a.physical() || !b.physical()) {
    throw_invalid("equivalence is defined between physical bodies (nonnegative masses, positive total)");
  }
  const MechanicalSummary sa = summary(a, tol);
  const MechanicalSummary sb = summary(b, tol);
  if (!sa.center_of_mass || !sb.center_of_mass) return false;

  const double mass_scale = std::max(sa.total_mass, sb.total_mass);
  const double r = std::max(a.max_radius(), b.max_radius());
  return std::abs(sa.total_mass - sb.total_mass) <= tol.threshold(mass_scale) &&
         (*sa.center_of_mass - *sb.center_of_mass).norm() <= tol.threshold(r) &&
         (*sa.inertia_cm - *sb.inertia_cm).norm() <= tol.threshold(mass_scale * r * r);
}

FeasibleInterval equivalent_family(const PointMassSet& base, const PointMassSet& invisible,
                                   const Tolerance& tol) {
  if (!base.physical()) throw_invalid("family base must be a physical body");
  if (!is_invisible(invisible, tol)) {
    throw_precondition("invisible_direction", "family direction is not a dynamically invisible body");
  }
  const PointMassSet sites_body = merged(base);
  std::vector<PointMass> sites = sites_body.points();
  std::vector<double> base_mass;
  for (const auto& s : sites) base_mass.push_back(s.mass);
  std::vector<double> direction(sites.size(), 0.0);

  const double eps = kMergeRelTolerance * std::max(base.max_radius(), invisible.max_radius());
  for (const auto& p : invisible.points()) {
    auto it = std::find_if(sites.begin(), sites.end(), [&](const PointMass& s) {
      return (s.position - p.position).norm() <= eps;
    });
    if (it == sites.end()) {
      sites.push_back(p);
      base_mass.push_back(0.0);
      direction.push_back(p.mass);
    } else {
      direction[static_cast<std::size_t>(it - sites.begin())] += p.mass;
    }
  }
  return positivity_interval(base_mass, direction);
}

PointMassSet family_member(const PointMassSet& base, const PointMassSet& invisible,
                           double lambda) {
  const WeightedBody terms[] = {{1.0, base}, {lambda, invisible}};
  return superpose(terms);
}

PointMassSet platonic_fixture(PlatonicSolid kind, double mass, double scale) {
  if (!(mass > 0.0) || !(scale > 0.0)) throw_invalid("platonic fixture needs positive mass and scale");
  std::vector<Vec3> vertices;
  switch (kind) {
    case PlatonicSolid::kTetrahedron:
      vertices = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case PlatonicSolid::kCube:
      for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
          for (int sz : {1, -1}) vertices.emplace_back(sx, sy, sz);
        }
      }
      break;
    case PlatonicSolid::kOctahedron:
      vertices = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
  }
  std::vector<PointMass> points;
  for (const auto& v : vertices) points.push_back({mass, scale * v});
  return PointMassSet(std::move(points));
}

PointMassSet minimal_invisible_body(double m, double l1, double l2) {
  if (!(l1 > 0.0) || !(l2 > 0.0)) throw_invalid("lever arms must be positive");
  const double m2 = m * l1 / l2;
  return PointMassSet({{m, {0, 0, l1}}, {m2, {0, 0, -l2}}, {-m, {0, 0, -l1}}, {-m2, {0, 0, l2}}});
}

}  // namespace invis::body
