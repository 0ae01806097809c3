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

#ifndef INVIS_KERNELS_H_
#define INVIS_KERNELS_H_

// Data-parallel inner loops. Each kernel has a scalar reference implementation
// and, on x86-64, an AVX2 variant; the unqualified entry points dispatch to the
// best variant the running CPU supports. Setting INVIS_ISA=scalar in the
// environment forces the reference path.
//
// This header deliberately avoids Eigen so the AVX2 translation unit never
// instantiates Eigen templates under different target flags.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace invis::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Best ISA the CPU supports (ignores INVIS_ISA).
Isa detected_isa();

// ISA used by the dispatching entry points.
Isa active_isa();

// First and second moments of a signed point-mass cloud about `origin`:
//   mass   = sum m
//   first  = sum m d           (d = x - origin)
//   second = sum m d_a d_b     ordered xx, yy, zz, xy, xz, yz
struct MassMoments {
  double mass = 0.0;
  std::array<double, 3> first{};
  std::array<double, 6> second{};
};

// Structure-of-arrays view of a point-mass cloud. All spans share a length.
struct MassCloud {
  std::span<const double> m;
  std::span<const double> x;
  std::span<const double> y;
  std::span<const double> z;
};

// Trapezoidal integral of f(t) * g(t) sampled at abscissae t. Requires
// t.size() == f.size() == g.size(); returns 0 for fewer than two samples.
double trapezoid_product(std::span<const double> t, std::span<const double> f,
                         std::span<const double> g);

MassMoments mass_moments(const MassCloud& cloud, const std::array<double, 3>& origin);

namespace scalar {
double trapezoid_product(std::span<const double> t, std::span<const double> f,
                         std::span<const double> g);
MassMoments mass_moments(const MassCloud& cloud, const std::array<double, 3>& origin);
}  // namespace scalar

namespace avx2 {
// False when the library was built without AVX2 kernels or the CPU lacks AVX2.
// Calling the kernels below when this is false is undefined.
bool available();
double trapezoid_product(std::span<const double> t, std::span<const double> f,
                         std::span<const double> g);
MassMoments mass_moments(const MassCloud& cloud, const std::array<double, 3>& origin);
}  // namespace avx2

}  // namespace invis::kernels

#endif  // INVIS_KERNELS_H_
