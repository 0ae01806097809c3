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

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "test_util.h"

namespace invis::quantum {
namespace {

using testing::kind_of;
using testing::min_eig;
using testing::precondition_of;
using testing::Rng;

constexpr double kInf = std::numeric_limits<double>::infinity();

HermitianOperator diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return HermitianOperator(m);
}

HermitianOperator qubit(double v) { return diag2((1 + v) / 2, (1 - v) / 2); }

MeasurementRecord sigma3_record(double v) { return MeasurementRecord(2, {pauli::sigma3()}, {v}); }

// Orthogonal projector onto the span of the realified operators.
Eigen::MatrixXd span_projector(const std::vector<HermitianOperator>& ops) {
  Eigen::MatrixXd a(ops.front().dim() * ops.front().dim(), ops.size());
  for (std::size_t k = 0; k < ops.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = realify(ops[k]);
  return a * (a.transpose() * a).inverse() * a.transpose();
}

std::vector<HermitianOperator> random_suite(Rng& rng, int d, int m) {
  std::vector<HermitianOperator> suite;
  for (int k = 0; k < m; ++k) suite.emplace_back(testing::random_hermitian(rng, d));
  return suite;
}

TEST(HermitianOperator, Validation) {
  ComplexMatrix m(2, 2);
  m << 1.0, std::complex<double>(0, 1), std::complex<double>(0, 1), 0.0;
  EXPECT_EQ(kind_of([&] { HermitianOperator h(m); }), ErrorKind::kInvalidInput);
  EXPECT_EQ(kind_of([] { HermitianOperator h(ComplexMatrix::Zero(2, 3)); }), ErrorKind::kInvalidInput);
  EXPECT_EQ(kind_of([] { HermitianOperator h(ComplexMatrix::Zero(0, 0)); }), ErrorKind::kInvalidInput);
  ComplexMatrix nan = ComplexMatrix::Identity(2, 2);
  nan(1, 1) = std::nan("");
  EXPECT_EQ(kind_of([&] { HermitianOperator h(nan); }), ErrorKind::kInvalidInput);
  // Tiny asymmetry is symmetrized away.
  m << 1.0, std::complex<double>(0.5, 1e-14), std::complex<double>(0.5, 0.0), 0.0;
  const HermitianOperator h(m);
  EXPECT_EQ(h.matrix()(0, 1), std::conj(h.matrix()(1, 0)));
}

TEST(DensityState, RejectsNonPhysical) {
  EXPECT_EQ(kind_of([] { DensityState s(diag2(1.2, -0.2)); }), ErrorKind::kInvalidInput);
  EXPECT_EQ(kind_of([] { DensityState s(diag2(0.6, 0.6)); }), ErrorKind::kInvalidInput);
  EXPECT_NO_THROW(DensityState s(diag2(1.0, 0.0)));
}

TEST(Realify, InnerProductIsTraceProduct) {
  Rng rng(31);
  for (int d = 1; d <= 5; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix a = testing::random_hermitian(rng, d);
      const ComplexMatrix b = testing::random_hermitian(rng, d);
      const double dot = realify(HermitianOperator(a)).dot(realify(HermitianOperator(b)));
      const std::complex<double> tr = testing::trace_product(a, b);
      EXPECT_NEAR(dot, tr.real(), 1e-12 * (1 + std::abs(tr)));
      EXPECT_EQ(realify(HermitianOperator(a)).size(), d * d);
      const HermitianOperator back = derealify(realify(HermitianOperator(a)), static_cast<std::size_t>(d));
      EXPECT_LE((back.matrix() - a).norm(), 1e-14 * (1 + a.norm()));
    }
  }
  EXPECT_EQ(kind_of([] { derealify(Eigen::VectorXd::Zero(5), 2); }), ErrorKind::kInvalidInput);
}

TEST(Expectation, Examples) {
  Rng rng(37);
  const ComplexMatrix m = testing::random_hermitian(rng, 3);
  const HermitianOperator mixed(ComplexMatrix::Identity(3, 3) / 3.0);
  EXPECT_NEAR(expectation(mixed, HermitianOperator(m)), m.trace().real() / 3.0, 1e-15);
  for (double a : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(expectation(DensityState(diag2(a, 1 - a)), pauli::sigma3()), 2 * a - 1, 1e-15);
  }
  EXPECT_EQ(kind_of([&] { expectation(mixed, pauli::sigma1()); }), ErrorKind::kInvalidInput);
}

TEST(Expectation, MatchesEntrywiseTrace) {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 4;
    const ComplexMatrix rho = testing::random_density(rng, d);
    const ComplexMatrix m = testing::random_hermitian(rng, d);
    const double oracle = testing::trace_product(rho, m).real();
    EXPECT_NEAR(expectation(DensityState(HermitianOperator(rho)), HermitianOperator(m)), oracle,
                1e-12 * (1 + std::abs(oracle)));
  }
}

TEST(InvisibleSpace, QubitSigma3) {
  const std::vector<HermitianOperator> suite = {pauli::sigma3()};
  const InvisibleOperatorBasis b = invisible_space(2, suite);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_LE((span_projector(b.vectors) - span_projector({pauli::sigma1(), pauli::sigma2()})).norm(), 1e-10);
}

TEST(InvisibleSpace, FullTomographyAndEmptySuite) {
  const std::vector<HermitianOperator> pauli_suite = {pauli::sigma1(), pauli::sigma2(), pauli::sigma3()};
  EXPECT_EQ(invisible_space(2, pauli_suite).size(), 0u);

  const InvisibleOperatorBasis b = invisible_space(3, {});
  ASSERT_EQ(b.size(), 8u);
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_LE(std::abs(b.vectors[i].trace()), 1e-12);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double ip = testing::trace_product(b.vectors[i].matrix().adjoint(), b.vectors[j].matrix()).real();
      EXPECT_NEAR(ip, i == j ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(InvisibleSpace, DimensionMismatchRejected) {
  const std::vector<HermitianOperator> suite = {pauli::sigma3()};
  EXPECT_EQ(kind_of([&] { invisible_space(3, suite); }), ErrorKind::kInvalidInput);
}

TEST(InvisibleSpace, DimensionLawAndConstraints) {
  Rng rng(43);
  for (int d = 2; d <= 4; ++d) {
    for (int m = 0; m <= d * d - 1; ++m) {
      const auto suite = random_suite(rng, d, m);
      const InvisibleOperatorBasis b = invisible_space(static_cast<std::size_t>(d), suite);
      ASSERT_EQ(static_cast<int>(b.size()), d * d - 1 - m) << d << " " << m;
      for (const auto& x : b.vectors) {
        EXPECT_LE(std::abs(x.trace()), 1e-10);
        for (const auto& obs : suite) {
          EXPECT_LE(std::abs(testing::trace_product(x.matrix(), obs.matrix())), 1e-10 * (1 + obs.norm()));
        }
      }
    }
  }
}

TEST(InvisibleSpace, RedundantObservablesDoNotCount) {
  const std::vector<HermitianOperator> suite = {pauli::sigma3(), pauli::sigma3() * 2.0,
                                                HermitianOperator::identity(2)};
  EXPECT_EQ(invisible_space(2, suite).size(), 2u);
}

TEST(InvisibleSpace, ElementsAreNeverPositive) {
  Rng rng(47);
  for (int d = 2; d <= 4; ++d) {
    for (int m = 0; m < d * d - 1; ++m) {
      const auto suite = random_suite(rng, d, m);
      for (const auto& x : invisible_space(static_cast<std::size_t>(d), suite).vectors) {
        EXPECT_LT(x.eigenvalues()(0), -1e-6);
      }
    }
  }
}

TEST(IsPhysical, Examples) {
  EXPECT_TRUE(is_physical(HermitianOperator(ComplexMatrix::Identity(3, 3) / 3.0)));
  EXPECT_FALSE(is_physical(diag2(1.2, -0.2)));
  EXPECT_FALSE(is_physical(diag2(0.5, 0.6)));
  ComplexMatrix m(2, 2);
  m << 0.75, 0.5, 0.5, 0.25;
  EXPECT_FALSE(is_physical(HermitianOperator(m)));
  m << 0.75, 0.4, 0.4, 0.25;
  EXPECT_TRUE(is_physical(HermitianOperator(m)));
}

TEST(IsPhysical, QubitConditionAgrees) {
  Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = testing::uniform(rng, 0, 1);
    const std::complex<double> beta(testing::uniform(rng, -0.5, 0.5), testing::uniform(rng, -0.5, 0.5));
    const double margin = a * (1 - a) - std::norm(beta);
    if (std::abs(margin) < 1e-6) continue;
    ComplexMatrix m(2, 2);
    m << a, beta, std::conj(beta), 1 - a;
    EXPECT_EQ(is_physical(HermitianOperator(m)), margin > 0);
  }
}

TEST(FeasibleInterval, Examples) {
  const FeasibleInterval zero = feasible_step_interval(DensityState(qubit(0.6)), HermitianOperator::zero(2));
  EXPECT_EQ(zero.lo, -kInf);
  EXPECT_EQ(zero.hi, kInf);

  for (double v : {0.0, 0.3, 0.6, 0.9, -0.6}) {
    const double half = std::sqrt(1 - v * v) / 2;
    for (const HermitianOperator& x : {pauli::sigma1(), pauli::sigma2()}) {
      const FeasibleInterval f = feasible_step_interval(DensityState(qubit(v)), x);
      EXPECT_NEAR(f.lo, -half, 1e-9) << v;
      EXPECT_NEAR(f.hi, half, 1e-9) << v;
    }
  }
}

TEST(FeasibleInterval, SingularStates) {
  const DensityState pure(diag2(1.0, 0.0));
  const FeasibleInterval off = feasible_step_interval(pure, pauli::sigma1());
  EXPECT_EQ(off.lo, 0.0);
  EXPECT_EQ(off.hi, 0.0);
  const FeasibleInterval diag = feasible_step_interval(pure, pauli::sigma3());
  EXPECT_NEAR(diag.lo, -1.0, 1e-12);
  EXPECT_EQ(diag.hi, 0.0);

  // Rank-2 state in d = 3 moved within its support.
  ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  ComplexMatrix x = ComplexMatrix::Zero(3, 3);
  x(0, 1) = x(1, 0) = 1.0;
  const FeasibleInterval inside = feasible_step_interval(DensityState(HermitianOperator(rho)), HermitianOperator(x));
  EXPECT_NEAR(inside.lo, -0.5, 1e-9);
  EXPECT_NEAR(inside.hi, 0.5, 1e-9);
}

TEST(FeasibleInterval, RejectsTracedDirection) {
  EXPECT_EQ(kind_of([] { feasible_step_interval(DensityState(qubit(0.0)), diag2(1.0, 0.0)); }),
            ErrorKind::kInvalidInput);
  EXPECT_EQ(kind_of([] { feasible_step_interval(DensityState(qubit(0.0)), HermitianOperator::zero(3)); }),
            ErrorKind::kInvalidInput);
}

TEST(FeasibleInterval, EndpointProperties) {
  Rng rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 3;
    const ComplexMatrix rho = testing::random_density(rng, d);
    const ComplexMatrix x = testing::random_traceless(rng, d);
    const FeasibleInterval f = feasible_step_interval(DensityState(HermitianOperator(rho)), HermitianOperator(x));
    ASSERT_TRUE(f.contains(0.0));
    ASSERT_TRUE(f.bounded());
    for (int s = 0; s <= 10; ++s) {
      const double lambda = f.lo + (f.hi - f.lo) * s / 10.0;
      EXPECT_GE(min_eig(rho + lambda * x), -1e-9);
    }
    EXPECT_NEAR(min_eig(rho + f.lo * x), 0.0, 1e-8);
    EXPECT_NEAR(min_eig(rho + f.hi * x), 0.0, 1e-8);
    EXPECT_LT(min_eig(rho + (f.lo - 1e-4) * x), 0.0);
    EXPECT_LT(min_eig(rho + (f.hi + 1e-4) * x), 0.0);
    EXPECT_NEAR(f.hi, testing::bisect_psd_root(rho, x), 1e-6 * (1 + f.hi));
    EXPECT_NEAR(f.lo, -testing::bisect_psd_root(rho, -x), 1e-6 * (1 + std::abs(f.lo)));
  }
}

TEST(FeasibleInterval, SingularRandomStatesAgreeWithBisection) {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 3;
    // Rank-deficient state plus a direction that stays in its support.
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    std::normal_distribution<double> n;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) g(i, j) = {n(rng), n(rng)};
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    x.topLeftCorner(2, 2) = testing::random_traceless(rng, 2);
    const FeasibleInterval f = feasible_step_interval(DensityState(HermitianOperator(rho)), HermitianOperator(x));
    EXPECT_NEAR(f.hi, testing::bisect_psd_root(rho, x), 1e-7);
    EXPECT_NEAR(f.lo, -testing::bisect_psd_root(rho, -x), 1e-7);
  }
}

TEST(ReconstructAffine, Examples) {
  const AffineReconstruction zero = reconstruct_affine(sigma3_record(0.0));
  EXPECT_TRUE(zero.physical);
  EXPECT_LE((zero.solution.matrix() - ComplexMatrix::Identity(2, 2) / 2.0).norm(), 1e-14);

  for (double v : {-0.9, -0.2, 0.6, 1.0}) {
    const AffineReconstruction r = reconstruct_affine(sigma3_record(v));
    EXPECT_TRUE(r.physical);
    EXPECT_LE((r.solution.matrix() - qubit(v).matrix()).norm(), 1e-14);
  }

  const AffineReconstruction over = reconstruct_affine(sigma3_record(1.5));
  EXPECT_FALSE(over.physical);
  EXPECT_LT(over.min_eigenvalue, 0.0);
  EXPECT_LE((over.solution.matrix() - diag2(1.25, -0.25).matrix()).norm(), 1e-14);
  EXPECT_EQ(precondition_of([&] { over.state(); }), "physical_base_state");
}

TEST(ReconstructAffine, InconsistentRecordIsInfeasible) {
  const MeasurementRecord twice(2, {pauli::sigma3(), pauli::sigma3()}, {0.1, 0.2});
  EXPECT_EQ(kind_of([&] { reconstruct_affine(twice); }), ErrorKind::kInfeasibleRecord);
  const MeasurementRecord unit(2, {HermitianOperator::identity(2)}, {2.0});
  EXPECT_EQ(precondition_of([&] { reconstruct_affine(unit); }), "consistent_record");
}

TEST(ReconstructAffine, ReproducesValues) {
  Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 3;
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(d * d - 1));
    const auto suite = random_suite(rng, d, m);
    const HermitianOperator truth(testing::random_density(rng, d));
    std::vector<double> values;
    for (const auto& obs : suite) values.push_back(expectation(truth, obs));
    const AffineReconstruction r = reconstruct_affine(MeasurementRecord(static_cast<std::size_t>(d), suite, values));
    EXPECT_NEAR(r.solution.trace().real(), 1.0, 1e-10);
    for (std::size_t k = 0; k < suite.size(); ++k) {
      EXPECT_NEAR(expectation(r.solution, suite[k]), values[k], 1e-10 * (1 + std::abs(values[k])));
    }
    // Minimum norm: orthogonal to every invisible direction.
    for (const auto& x : invisible_space(static_cast<std::size_t>(d), suite).vectors) {
      EXPECT_LE(std::abs(realify(r.solution).dot(realify(x))), 1e-10);
    }
  }
}

TEST(MeasurementRecord, Validation) {
  EXPECT_EQ(kind_of([] { MeasurementRecord r(2, {pauli::sigma3()}, {0.1, 0.2}); }), ErrorKind::kInvalidInput);
  EXPECT_EQ(kind_of([] { MeasurementRecord r(3, {pauli::sigma3()}, {0.1}); }), ErrorKind::kInvalidInput);
  EXPECT_EQ(kind_of([] { MeasurementRecord r(2, {pauli::sigma3()}, {kInf}); }), ErrorKind::kInvalidInput);
}

TEST(AmbiguitySample, QubitBoundAndValues) {
  const std::vector<DensityState> samples = ambiguity_sample(sigma3_record(0.6), 100, 5);
  ASSERT_EQ(samples.size(), 100u);
  for (const auto& s : samples) {
    EXPECT_TRUE(is_physical(s.op()));
    EXPECT_NEAR(expectation(s, pauli::sigma3()), 0.6, 1e-9);
    EXPECT_LE(std::abs(s.matrix()(0, 1)), 0.4 + 1e-9);
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    EXPECT_NEAR(expectation(samples[i], pauli::sigma3()), expectation(samples[0], pauli::sigma3()), 1e-9);
  }
}

TEST(AmbiguitySample, EmptyInvisibleSpaceRepeatsBase) {
  const std::vector<HermitianOperator> suite = {pauli::sigma1(), pauli::sigma2(), pauli::sigma3()};
  const auto samples = ambiguity_sample(MeasurementRecord(2, suite, {0.1, 0.2, 0.3}), 4, 9);
  ASSERT_EQ(samples.size(), 4u);
  const AffineReconstruction base = reconstruct_affine(MeasurementRecord(2, suite, {0.1, 0.2, 0.3}));
  for (const auto& s : samples) EXPECT_EQ(s.matrix(), base.solution.matrix());
}

TEST(AmbiguitySample, DeterministicPerSeed) {
  const auto a = ambiguity_sample(sigma3_record(0.2), 20, 42);
  const auto b = ambiguity_sample(sigma3_record(0.2), 20, 42);
  const auto c = ambiguity_sample(sigma3_record(0.2), 20, 43);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].matrix(), b[i].matrix());
    differs = differs || a[i].matrix() != c[i].matrix();
  }
  EXPECT_TRUE(differs);
}

TEST(AmbiguitySample, Errors) {
  EXPECT_EQ(precondition_of([] { ambiguity_sample(sigma3_record(1.5), 3, 1); }), "physical_base_state");
  const MeasurementRecord twice(2, {pauli::sigma3(), pauli::sigma3()}, {0.1, 0.2});
  EXPECT_EQ(kind_of([&] { ambiguity_sample(twice, 3, 1); }), ErrorKind::kInfeasibleRecord);
}

TEST(AmbiguitySample, HigherDimensionalRecords) {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 3;
    const auto suite = random_suite(rng, d, 3);
    const HermitianOperator truth(testing::random_density(rng, d));
    std::vector<double> values;
    for (const auto& obs : suite) values.push_back(expectation(truth, obs));
    const MeasurementRecord record(3, suite, values);
    if (!reconstruct_affine(record).physical) continue;
    for (const auto& s : ambiguity_sample(record, 20, static_cast<std::uint64_t>(trial))) {
      EXPECT_TRUE(is_physical(s.op()));
      for (std::size_t k = 0; k < suite.size(); ++k) {
        EXPECT_NEAR(expectation(s, suite[k]), values[k], 1e-9 * (1 + std::abs(values[k])));
      }
    }
  }
}

TEST(BlindSpot, IdenticalSuites) {
  const std::vector<HermitianOperator> a = {pauli::sigma3()};
  const BlindSpotReport r = blind_spot_compare(2, a, a);
  EXPECT_EQ(r.dim_a, 2u);
  EXPECT_EQ(r.dim_b, 2u);
  EXPECT_EQ(r.dim_intersection, 2u);
  EXPECT_FALSE(r.a_resolved_by_b.has_value());
  EXPECT_FALSE(r.b_resolved_by_a.has_value());
}

TEST(BlindSpot, Sigma3AgainstSigma1) {
  const std::vector<HermitianOperator> a = {pauli::sigma3()};
  const std::vector<HermitianOperator> b = {pauli::sigma1()};
  const BlindSpotReport r = blind_spot_compare(2, a, b);
  EXPECT_EQ(r.dim_a, 2u);
  EXPECT_EQ(r.dim_b, 2u);
  ASSERT_EQ(r.dim_intersection, 1u);
  EXPECT_LE((span_projector(r.intersection.vectors) - span_projector({pauli::sigma2()})).norm(), 1e-10);
  ASSERT_TRUE(r.a_resolved_by_b.has_value());
  EXPECT_LE((span_projector({*r.a_resolved_by_b}) - span_projector({pauli::sigma1()})).norm(), 1e-10);
  EXPECT_GT(std::abs(expectation(*r.a_resolved_by_b, pauli::sigma1())), 1.0);
  ASSERT_TRUE(r.b_resolved_by_a.has_value());
  EXPECT_LE((span_projector({*r.b_resolved_by_a}) - span_projector({pauli::sigma3()})).norm(), 1e-10);
}

TEST(BlindSpot, FullTomographyResolvesEverything) {
  const std::vector<HermitianOperator> a = {pauli::sigma3()};
  const std::vector<HermitianOperator> b = {pauli::sigma1(), pauli::sigma2(), pauli::sigma3()};
  const BlindSpotReport r = blind_spot_compare(2, a, b);
  EXPECT_EQ(r.dim_b, 0u);
  EXPECT_EQ(r.dim_intersection, 0u);
  EXPECT_TRUE(r.a_resolved_by_b.has_value());
  EXPECT_FALSE(r.b_resolved_by_a.has_value());
  const std::vector<HermitianOperator> wrong = {HermitianOperator::identity(3)};
  EXPECT_EQ(kind_of([&] { blind_spot_compare(2, a, wrong); }), ErrorKind::kInvalidInput);
}

}  // namespace
}  // namespace invis::quantum
