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

#ifndef INVIS_LINALG_CORE_H_
#define INVIS_LINALG_CORE_H_

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace invis {

// Rank cutoff: a singular value s counts toward the rank iff
// s > rel * s_max + abs.
struct Tolerance {
  double rel = 1e-10;
  double abs = 0.0;

  // Throws kInvalidInput unless rel > 0 and abs >= 0.
  void validate() const;
  double threshold(double scale) const { return rel * scale + abs; }
};

// Dense, finite, row-major-addressable real matrix with at least one row and
// one column.
class RealMatrix {
 public:
  explicit RealMatrix(Eigen::MatrixXd values);
  static RealMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return static_cast<std::size_t>(values_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(values_.cols()); }
  double operator()(std::size_t r, std::size_t c) const { return values_(r, c); }
  const Eigen::MatrixXd& eigen() const { return values_; }

  std::vector<double> row_major() const;

 private:
  Eigen::MatrixXd values_;
};

// Orthonormal basis of a numerical null space.
struct KernelBasis {
  std::size_t dim_ambient = 0;
  std::vector<Eigen::VectorXd> vectors;

  std::size_t dim() const { return vectors.size(); }
  // Orthogonal projector onto span(vectors), dim_ambient x dim_ambient.
  Eigen::MatrixXd projector() const;
};

// Closed interval over the extended reals. Unbounded ends are IEEE infinities.
struct FeasibleInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool empty = false;

  static FeasibleInterval unbounded() { return {}; }
  static FeasibleInterval empty_set() { return {0.0, 0.0, true}; }

  bool contains(double lambda) const { return !empty && lo <= lambda && lambda <= hi; }
  bool bounded() const { return !empty && std::isfinite(lo) && std::isfinite(hi); }
};

double spectral_norm(const Eigen::MatrixXd& a);

std::size_t numerical_rank(const RealMatrix& a, const Tolerance& tol = {});

// Basis vectors come from the trailing right singular vectors; each is
// normalized so that its first component with magnitude above 1e-12 is
// positive.
KernelBasis kernel_basis(const RealMatrix& a, const Tolerance& tol = {});

// Range of lambda keeping base + lambda * direction componentwise >= 0.
// base must be componentwise nonnegative; the result always contains 0.
FeasibleInterval positivity_interval(std::span<const double> base,
                                     std::span<const double> direction);

}  // namespace invis

#endif  // INVIS_LINALG_CORE_H_
