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

#ifndef INVIS_QUANTUM_GREYBOX_H_
#define INVIS_QUANTUM_GREYBOX_H_

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "invis/linalg_core.h"

namespace invis::quantum {

using ComplexMatrix = Eigen::MatrixXcd;

// Eigenvalue slack for positivity: lambda_min >= -(rel * (1 + |rho|) + abs).
inline constexpr Tolerance kPsdTolerance{1e-9, 0.0};

// Square complex matrix equal to its conjugate transpose within
// 1e-12 * max(1, max |a_ij|). Stored exactly Hermitian.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& matrix);
  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::complex<double> trace() const { return matrix_.trace(); }
  // Hilbert-Schmidt (Frobenius) norm.
  double norm() const { return matrix_.norm(); }
  Eigen::VectorXd eigenvalues() const;

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator*(double scale) const;

 private:
  ComplexMatrix matrix_;
};

// Hermitian, unit trace and positive semidefinite (within kPsdTolerance).
class DensityState {
 public:
  explicit DensityState(HermitianOperator op, const Tolerance& psd = kPsdTolerance);

  std::size_t dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

 private:
  HermitianOperator op_;
};

// Expectation values v_j = Tr(rho M_j) of a suite of observables.
class MeasurementRecord {
 public:
  MeasurementRecord(std::size_t dim, std::vector<HermitianOperator> observables,
                    std::vector<double> values);

  std::size_t dim() const { return dim_; }
  const std::vector<HermitianOperator>& observables() const { return observables_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t dim_;
  std::vector<HermitianOperator> observables_;
  std::vector<double> values_;
};

// Traceless Hermitian operators annihilated by every observable of a suite,
// orthonormal under Re Tr(X^dagger Y).
struct InvisibleOperatorBasis {
  std::size_t dim = 0;
  std::vector<HermitianOperator> vectors;

  std::size_t size() const { return vectors.size(); }
};

// Real coordinates of a Hermitian operator: the d diagonal entries, then for
// each strictly-upper entry (i, j) in row-major order the pair
// sqrt(2) Re a_ij, sqrt(2) Im a_ij. The Euclidean dot product of two
// coordinate vectors equals Tr(A B).
Eigen::VectorXd realify(const HermitianOperator& op);
HermitianOperator derealify(const Eigen::VectorXd& coords, std::size_t dim);

// Re Tr(rho M). Throws if the imaginary part exceeds 1e-10 of the scale.
double expectation(const HermitianOperator& rho, const HermitianOperator& observable);
double expectation(const DensityState& rho, const HermitianOperator& observable);

InvisibleOperatorBasis invisible_space(std::size_t dim, std::span<const HermitianOperator> suite,
                                       const Tolerance& tol = {});

// |Tr rho - 1| and -lambda_min(rho) both within tol.rel * (1 + |rho|) + tol.abs.
bool is_physical(const HermitianOperator& rho, const Tolerance& tol = kPsdTolerance);

// Largest closed interval of lambda with rho + lambda X positive semidefinite.
// Interior states use the pencil eigenvalues of rho^{-1/2} X rho^{-1/2};
// singular states check the kernel block and bisect on lambda_min otherwise.
FeasibleInterval feasible_step_interval(const DensityState& rho, const HermitianOperator& direction,
                                        const Tolerance& tol = {});

struct AffineReconstruction {
  HermitianOperator solution;
  bool physical = false;
  double min_eigenvalue = 0.0;
  double residual = 0.0;

  // Throws kPreconditionViolation when the solution is not physical.
  DensityState state() const;
};

// Minimum Frobenius-norm Hermitian solution of Tr rho = 1, Tr rho M_j = v_j.
AffineReconstruction reconstruct_affine(const MeasurementRecord& record,
                                        const Tolerance& tol = {});

// `count` physical states consistent with the record. Each is the minimum-norm
// state moved along a uniformly random unit invisible direction by a uniform
// step inside the feasible interval shrunk by 1e-6 relative.
std::vector<DensityState> ambiguity_sample(const MeasurementRecord& record, std::size_t count,
                                           std::uint64_t seed, const Tolerance& tol = {});

struct BlindSpotReport {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t dim_intersection = 0;
  InvisibleOperatorBasis intersection;
  // Unit invisible direction of suite A orthogonal to the shared blind spot,
  // hence detected by suite B; absent when A's blind spot lies inside B's.
  std::optional<HermitianOperator> a_resolved_by_b;
  std::optional<HermitianOperator> b_resolved_by_a;
};

BlindSpotReport blind_spot_compare(std::size_t dim, std::span<const HermitianOperator> suite_a,
                                   std::span<const HermitianOperator> suite_b,
                                   const Tolerance& tol = {});

namespace pauli {
HermitianOperator sigma1();
HermitianOperator sigma2();
HermitianOperator sigma3();
}  // namespace pauli

}  // namespace invis::quantum

#endif  // INVIS_QUANTUM_GREYBOX_H_
