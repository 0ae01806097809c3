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

#ifndef INVIS_TESTS_ORACLES_H_
#define INVIS_TESTS_ORACLES_H_

// Random generators and brute-force oracles shared by the unit and acceptance
// suites. Oracles here never call into the library's numerical routines.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "invis/quantum_greybox.h"
#include "invis/rigid_body.h"

namespace invis::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::MatrixXd random_matrix(Rng& rng, int rows, int cols, double lo = -1.0, double hi = 1.0) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  }
  return m;
}

// Haar-ish orthogonal matrix via QR of a Gaussian matrix; improper when asked.
inline Eigen::Matrix3d random_orthogonal(Rng& rng, bool improper) {
  std::normal_distribution<double> g;
  Eigen::Matrix3d a;
  for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = g(rng);
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(a);
  Eigen::Matrix3d q = qr.householderQ();
  if ((q.determinant() < 0) != improper) q.col(0) = -q.col(0);
  return q;
}

// Random body with masses in [lo, hi] and positions in [-5, 5]^3, shifted so
// that the center of mass sits at the origin.
inline body::PointMassSet random_centered_body(Rng& rng, int n, double lo = 0.1, double hi = 10.0) {
  std::vector<body::PointMass> pts;
  Eigen::Vector3d moment = Eigen::Vector3d::Zero();
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    body::PointMass p{uniform(rng, lo, hi),
                      {uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)}};
    moment += p.mass * p.position;
    total += p.mass;
    pts.push_back(p);
  }
  const Eigen::Vector3d cm = moment / total;
  for (auto& p : pts) p.position -= cm;
  // Subtraction leaves a lone point at roundoff distance rather than at 0.
  if (n == 1) pts[0].position.setZero();
  return body::PointMassSet(std::move(pts));
}

struct DirectMoments {
  double mass = 0.0;
  Eigen::Vector3d dipole = Eigen::Vector3d::Zero();
  Eigen::Matrix3d inertia = Eigen::Matrix3d::Zero();
};

// Literal double sum over points and tensor indices.
inline DirectMoments direct_moments(const body::PointMassSet& b,
                                    const Eigen::Vector3d& origin = Eigen::Vector3d::Zero()) {
  DirectMoments out;
  for (const auto& p : b.points()) {
    const Eigen::Vector3d x = p.position - origin;
    out.mass += p.mass;
    for (int a = 0; a < 3; ++a) {
      out.dipole(a) += p.mass * x(a);
      for (int c = 0; c < 3; ++c) {
        out.inertia(a, c) += p.mass * ((a == c ? x.squaredNorm() : 0.0) - x(a) * x(c));
      }
    }
  }
  return out;
}

inline quantum::ComplexMatrix random_hermitian(Rng& rng, int d) {
  std::normal_distribution<double> g;
  quantum::ComplexMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  }
  return 0.5 * (a + a.adjoint());
}

inline quantum::ComplexMatrix random_traceless(Rng& rng, int d) {
  quantum::ComplexMatrix x = random_hermitian(rng, d);
  x -= (x.trace() / static_cast<double>(d)) * quantum::ComplexMatrix::Identity(d, d);
  return x;
}

// Full-rank density matrix G G^dagger / Tr.
inline quantum::ComplexMatrix random_density(Rng& rng, int d) {
  std::normal_distribution<double> g;
  quantum::ComplexMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  }
  quantum::ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

// Tr(A B) by explicit double sum.
inline std::complex<double> trace_product(const quantum::ComplexMatrix& a,
                                          const quantum::ComplexMatrix& b) {
  std::complex<double> s = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, i);
  }
  return s;
}

inline double min_eig(const quantum::ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<quantum::ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Boundary of {t >= 0 : lambda_min(rho + t x) >= 0} by plain bisection on an
// expanding bracket.
inline double bisect_psd_root(const quantum::ComplexMatrix& rho, const quantum::ComplexMatrix& x) {
  double lo = 0.0;
  double hi = 1.0;
  while (min_eig(rho + hi * x) >= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (min_eig(rho + mid * x) >= 0.0 ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace invis::testing

#endif  // INVIS_TESTS_ORACLES_H_
