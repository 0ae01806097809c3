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

#include "invis/linalg_core.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "invis/error.h"

namespace invis {
namespace {

void require_finite(const Eigen::MatrixXd& a) {
  if (!a.allFinite()) throw_invalid("matrix has non-finite entries");
}

using Svd = Eigen::JacobiSVD<Eigen::MatrixXd, Eigen::ColPivHouseholderQRPreconditioner>;

std::size_t rank_from_singular_values(const Eigen::VectorXd& sv, const Tolerance& tol) {
  const double s_max = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = tol.threshold(s_max);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

void fix_sign(Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

}  // namespace

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid_input";
    case ErrorKind::kUnsupportedDimension:
      return "unsupported_dimension";
    case ErrorKind::kPreconditionViolation:
      return "precondition_violation";
    case ErrorKind::kInfeasibleRecord:
      return "infeasible_record";
    case ErrorKind::kIo:
      return "io";
    case ErrorKind::kParse:
      return "parse";
  }
  return "unknown";
}

void Tolerance::validate() const {
  if (!(rel > 0.0) || !std::isfinite(rel)) throw_invalid("tolerance rel must be positive");
  if (!(abs >= 0.0) || !std::isfinite(abs)) throw_invalid("tolerance abs must be nonnegative");
}

RealMatrix::RealMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (values_.rows() < 1 || values_.cols() < 1) throw_invalid("matrix must be at least 1x1");
  require_finite(values_);
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) throw_invalid("matrix must be at least 1x1");
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) throw_invalid("ragged matrix rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return RealMatrix(std::move(m));
}

std::vector<double> RealMatrix::row_major() const {
  std::vector<double> out;
  out.reserve(rows() * cols());
  for (Eigen::Index r = 0; r < values_.rows(); ++r) {
    for (Eigen::Index c = 0; c < values_.cols(); ++c) out.push_back(values_(r, c));
  }
  return out;
}

Eigen::MatrixXd KernelBasis::projector() const {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim_ambient, dim_ambient);
  for (const auto& v : vectors) p += v * v.transpose();
  return p;
}

double spectral_norm(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 0.0;
  Svd svd(a);
  return svd.singularValues()(0);
}

std::size_t numerical_rank(const RealMatrix& a, const Tolerance& tol) {
  tol.validate();
  Svd svd(a.eigen());
  return rank_from_singular_values(svd.singularValues(), tol);
}

KernelBasis kernel_basis(const RealMatrix& a, const Tolerance& tol) {
  tol.validate();
  Svd svd(a.eigen(), Eigen::ComputeFullV);
  const std::size_t rank = rank_from_singular_values(svd.singularValues(), tol);
  const Eigen::MatrixXd& v = svd.matrixV();

  KernelBasis basis;
  basis.dim_ambient = a.cols();
  for (Eigen::Index c = static_cast<Eigen::Index>(rank); c < v.cols(); ++c) {
    Eigen::VectorXd col = v.col(c);
    fix_sign(col);
    basis.vectors.push_back(std::move(col));
  }
  return basis;
}

FeasibleInterval positivity_interval(std::span<const double> base,
                                     std::span<const double> direction) {
  if (base.size() != direction.size()) {
    throw_invalid("base and direction lengths differ (" + std::to_string(base.size()) + " vs " +
                  std::to_string(direction.size()) + ")");
  }
  FeasibleInterval out = FeasibleInterval::unbounded();
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (!std::isfinite(base[k]) || !std::isfinite(direction[k])) {
      throw_invalid("non-finite entry at index " + std::to_string(k));
    }
    if (base[k] < 0.0) throw_invalid("base has a negative entry at index " + std::to_string(k));
    const double d = direction[k];
    if (d > 0.0) {
      out.lo = std::max(out.lo, -base[k] / d);
    } else if (d < 0.0) {
      out.hi = std::min(out.hi, -base[k] / d);
    }
  }
  return out;
}

}  // namespace invis
