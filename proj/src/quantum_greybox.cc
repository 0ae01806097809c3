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

#include "invis/quantum_greybox.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "invis/error.h"

namespace invis::quantum {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

using Eigensolver = Eigen::SelfAdjointEigenSolver<ComplexMatrix>;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void require_dim(const HermitianOperator& op, std::size_t dim, const char* what) {
  if (op.dim() != dim) {
    throw_invalid(std::string(what) + " has dimension " + std::to_string(op.dim()) +
                  ", expected " + std::to_string(dim));
  }
}

// Rows: realified identity, then realified observables.
RealMatrix constraint_matrix(std::size_t dim, std::span<const HermitianOperator> suite) {
  Eigen::MatrixXd a(1 + suite.size(), dim * dim);
  a.row(0) = realify(HermitianOperator::identity(dim)).transpose();
  for (std::size_t j = 0; j < suite.size(); ++j) {
    require_dim(suite[j], dim, "observable");
    a.row(1 + j) = realify(suite[j]).transpose();
  }
  return RealMatrix(std::move(a));
}

InvisibleOperatorBasis to_operator_basis(const KernelBasis& kernel, std::size_t dim) {
  InvisibleOperatorBasis out;
  out.dim = dim;
  for (const auto& v : kernel.vectors) out.vectors.push_back(derealify(v, dim));
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) {
  Eigensolver es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Largest t >= 0 with lambda_min(rho + t X) >= -slack, by bisection. X must be
// traceless and nonzero so that it has a negative eigenvalue.
double bisect_step(const ComplexMatrix& rho, const ComplexMatrix& x, double rho_max,
                   double slack) {
  const double x_min = min_eigenvalue(x);
  double lo = 0.0;
  double hi = (rho_max + slack) / -x_min * (1.0 + 1e-9) + 1e-300;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (min_eigenvalue(rho + mid * x) >= -slack) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

HermitianOperator::HermitianOperator(const ComplexMatrix& matrix) {
  if (matrix.rows() < 1 || matrix.rows() != matrix.cols()) {
    throw_invalid("operator must be a nonempty square matrix");
  }
  if (!matrix.allFinite()) throw_invalid("operator has non-finite entries");
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  const double skew = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (skew > 1e-12 * scale) {
    throw_invalid("operator is not Hermitian (|A - A^dagger| = " + fmt(skew) + ")");
  }
  matrix_ = 0.5 * (matrix + matrix.adjoint());
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

Eigen::VectorXd HermitianOperator::eigenvalues() const {
  Eigensolver es(matrix_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  require_dim(other, dim(), "summand");
  return HermitianOperator(matrix_ + other.matrix_);
}

HermitianOperator HermitianOperator::operator*(double scale) const {
  return HermitianOperator(scale * matrix_);
}

DensityState::DensityState(HermitianOperator op, const Tolerance& psd) : op_(std::move(op)) {
  if (!is_physical(op_, psd)) {
    const Eigen::VectorXd ev = op_.eigenvalues();
    throw_invalid("not a density matrix (trace " + fmt(op_.trace().real()) +
                  ", min eigenvalue " + fmt(ev(0)) + ")");
  }
}

MeasurementRecord::MeasurementRecord(std::size_t dim, std::vector<HermitianOperator> observables,
                                     std::vector<double> values)
    : dim_(dim), observables_(std::move(observables)), values_(std::move(values)) {
  if (dim_ < 1) throw_invalid("record dimension must be positive");
  if (observables_.size() != values_.size()) {
    throw_invalid("record has " + std::to_string(observables_.size()) + " observables but " +
                  std::to_string(values_.size()) + " values");
  }
  for (const auto& m : observables_) require_dim(m, dim_, "observable");
  for (double v : values_) {
    if (!std::isfinite(v)) throw_invalid("record value is not finite");
  }
}

Eigen::VectorXd realify(const HermitianOperator& op) {
  const std::size_t d = op.dim();
  const ComplexMatrix& a = op.matrix();
  Eigen::VectorXd out(d * d);
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < d; ++i) out(k++) = a(i, i).real();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      out(k++) = kSqrt2 * a(i, j).real();
      out(k++) = kSqrt2 * a(i, j).imag();
    }
  }
  return out;
}

HermitianOperator derealify(const Eigen::VectorXd& coords, std::size_t dim) {
  if (static_cast<std::size_t>(coords.size()) != dim * dim) {
    throw_invalid("coordinate vector length does not match dimension");
  }
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < dim; ++i) a(i, i) = coords(k++);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double re = coords(k++) / kSqrt2;
      const double im = coords(k++) / kSqrt2;
      a(i, j) = {re, im};
      a(j, i) = {re, -im};
    }
  }
  return HermitianOperator(a);
}

double expectation(const HermitianOperator& rho, const HermitianOperator& observable) {
  require_dim(observable, rho.dim(), "observable");
  const std::complex<double> tr = (rho.matrix().array() * observable.matrix().transpose().array()).sum();
  const double scale = std::max(1.0, rho.norm() * observable.norm());
  if (std::abs(tr.imag()) > 1e-10 * scale) {
    throw_invalid("Tr(rho M) has imaginary part " + fmt(tr.imag()));
  }
  return tr.real();
}

double expectation(const DensityState& rho, const HermitianOperator& observable) {
  return expectation(rho.op(), observable);
}

InvisibleOperatorBasis invisible_space(std::size_t dim, std::span<const HermitianOperator> suite,
                                       const Tolerance& tol) {
  if (dim < 1) throw_invalid("dimension must be positive");
  return to_operator_basis(kernel_basis(constraint_matrix(dim, suite), tol), dim);
}

bool is_physical(const HermitianOperator& rho, const Tolerance& tol) {
  tol.validate();
  const Eigen::VectorXd ev = rho.eigenvalues();
  const double spectral = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  const double slack = tol.threshold(1.0 + spectral);
  return std::abs(rho.trace().real() - 1.0) <= slack && ev(0) >= -slack;
}

FeasibleInterval feasible_step_interval(const DensityState& rho, const HermitianOperator& direction,
                                        const Tolerance& tol) {
  tol.validate();
  require_dim(direction, rho.dim(), "direction");
  const double x_norm = direction.norm();
  if (std::abs(direction.trace().real()) > tol.threshold(1.0 + x_norm)) {
    throw_invalid("direction is not traceless (Tr X = " + fmt(direction.trace().real()) + ")");
  }
  if (x_norm == 0.0) return FeasibleInterval::unbounded();

  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix& x = direction.matrix();
  Eigensolver es(r);
  const Eigen::VectorXd& lam = es.eigenvalues();
  const ComplexMatrix& u = es.eigenvectors();
  const double rho_max = lam(lam.size() - 1);
  const double singular_cut = 1e-10 * rho_max;

  FeasibleInterval out;
  if (lam(0) > singular_cut) {
    // rho + t X >= 0  <=>  I + t K >= 0 with K = rho^{-1/2} X rho^{-1/2}.
    const Eigen::VectorXd inv_sqrt = lam.cwiseSqrt().cwiseInverse();
    const ComplexMatrix w = u * inv_sqrt.asDiagonal() * u.adjoint();
    const ComplexMatrix k = w * x * w;
    Eigensolver ks(0.5 * (k + k.adjoint()), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& mu = ks.eigenvalues();
    const double mu_cut = 1e-14 * mu.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
      if (mu(i) > mu_cut) out.lo = std::max(out.lo, -1.0 / mu(i));
      if (mu(i) < -mu_cut) out.hi = std::min(out.hi, -1.0 / mu(i));
    }
    return out;
  }

  // Singular rho: the kernel block of X decides which directions leave the
  // cone immediately; remaining sides are found by bisection.
  Eigen::Index kernel_dim = 0;
  while (kernel_dim < lam.size() && lam(kernel_dim) <= singular_cut) ++kernel_dim;
  const auto u0 = u.leftCols(kernel_dim);
  const auto us = u.rightCols(lam.size() - kernel_dim);
  const ComplexMatrix c = u0.adjoint() * x * u0;
  const ComplexMatrix b = us.adjoint() * x * u0;
  Eigensolver cs(0.5 * (c + c.adjoint()), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& cev = cs.eigenvalues();
  const double cut = 1e-12 * x.norm();
  bool hi_blocked = cev(0) < -cut;
  bool lo_blocked = cev(cev.size() - 1) > cut;
  if (cev.cwiseAbs().maxCoeff() <= cut && b.size() > 0 && b.norm() > cut) {
    hi_blocked = lo_blocked = true;
  }

  const double slack = 1e-13 * (1.0 + rho_max);
  out.hi = hi_blocked ? 0.0 : bisect_step(r, x, rho_max, slack);
  out.lo = lo_blocked ? 0.0 : -bisect_step(r, -x, rho_max, slack);
  return out;
}

DensityState AffineReconstruction::state() const {
  if (!physical) {
    throw_precondition("physical_base_state",
                       "affine solution is not positive semidefinite (min eigenvalue " +
                           fmt(min_eigenvalue) + ")");
  }
  return DensityState(solution);
}

AffineReconstruction reconstruct_affine(const MeasurementRecord& record, const Tolerance& tol) {
  tol.validate();
  const std::size_t d = record.dim();
  const RealMatrix a = constraint_matrix(d, record.observables());
  Eigen::VectorXd c(1 + record.values().size());
  c(0) = 1.0;
  for (std::size_t j = 0; j < record.values().size(); ++j) c(1 + j) = record.values()[j];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.eigen(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = tol.threshold(sv(0));
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  }
  const Eigen::VectorXd coords = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose() * c;
  const double residual = (a.eigen() * coords - c).norm();
  if (residual > tol.threshold(sv(0) * coords.norm() + c.norm())) {
    throw Error(ErrorKind::kInfeasibleRecord,
                "measurement record is inconsistent (least-squares residual " + fmt(residual) + ")",
                "consistent_record");
  }

  AffineReconstruction out{derealify(coords, d)};
  out.residual = residual;
  out.min_eigenvalue = out.solution.eigenvalues()(0);
  out.physical = is_physical(out.solution);
  return out;
}

std::vector<DensityState> ambiguity_sample(const MeasurementRecord& record, std::size_t count,
                                           std::uint64_t seed, const Tolerance& tol) {
  const DensityState base = reconstruct_affine(record, tol).state();
  const InvisibleOperatorBasis basis = invisible_space(record.dim(), record.observables(), tol);
  std::vector<DensityState> out;
  out.reserve(count);
  if (basis.size() == 0) {
    out.assign(count, base);
    return out;
  }

  std::vector<Eigen::VectorXd> coords;
  for (const auto& b : basis.vectors) coords.push_back(realify(b));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  constexpr double kShrink = 1.0 - 1e-6;
  while (out.size() < count) {
    Eigen::VectorXd g(static_cast<Eigen::Index>(coords.size()));
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = normal(rng);
    const double g_norm = g.norm();
    if (g_norm == 0.0) continue;
    Eigen::VectorXd dir = Eigen::VectorXd::Zero(coords.front().size());
    for (Eigen::Index i = 0; i < g.size(); ++i) dir += (g(i) / g_norm) * coords[i];
    const HermitianOperator x = derealify(dir, record.dim());

    const FeasibleInterval range = feasible_step_interval(base, x, tol);
    std::uniform_real_distribution<double> step(kShrink * range.lo, kShrink * range.hi);
    const double lambda = step(rng);
    out.emplace_back(HermitianOperator(base.matrix() + lambda * x.matrix()));
  }
  return out;
}

BlindSpotReport blind_spot_compare(std::size_t dim, std::span<const HermitianOperator> suite_a,
                                   std::span<const HermitianOperator> suite_b,
                                   const Tolerance& tol) {
  const KernelBasis ka = kernel_basis(constraint_matrix(dim, suite_a), tol);
  const KernelBasis kb = kernel_basis(constraint_matrix(dim, suite_b), tol);
  std::vector<HermitianOperator> stacked(suite_a.begin(), suite_a.end());
  stacked.insert(stacked.end(), suite_b.begin(), suite_b.end());
  const KernelBasis kab = kernel_basis(constraint_matrix(dim, stacked), tol);
  const Eigen::MatrixXd shared = kab.projector();

  // Component of `own` orthogonal to the shared blind spot with the largest norm.
  auto resolved = [&](const KernelBasis& own) -> std::optional<HermitianOperator> {
    if (own.dim() <= kab.dim()) return std::nullopt;
    Eigen::VectorXd best;
    double best_norm = 0.0;
    for (const auto& v : own.vectors) {
      Eigen::VectorXd r = v - shared * v;
      const double n = r.norm();
      if (n > best_norm) {
        best_norm = n;
        best = std::move(r);
      }
    }
    if (best_norm <= 1e-8) return std::nullopt;
    return derealify(best / best_norm, dim);
  };

  BlindSpotReport report;
  report.dim_a = ka.dim();
  report.dim_b = kb.dim();
  report.dim_intersection = kab.dim();
  report.intersection = to_operator_basis(kab, dim);
  report.a_resolved_by_b = resolved(ka);
  report.b_resolved_by_a = resolved(kb);
  return report;
}

namespace pauli {

HermitianOperator sigma1() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return HermitianOperator(m);
}

HermitianOperator sigma2() {
  using namespace std::complex_literals;
  ComplexMatrix m(2, 2);
  m << 0.0, -1.0i, 1.0i, 0.0;
  return HermitianOperator(m);
}

HermitianOperator sigma3() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return HermitianOperator(m);
}

}  // namespace pauli

}  // namespace invis::quantum
