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

#include <cstdlib>
#include <string>

#include "invis/kernels.h"

namespace invis::kernels {

#ifndef INVIS_HAVE_AVX2_KERNELS
// Stubs so the avx2 namespace links on targets without the AVX2 translation unit.
namespace avx2 {
double trapezoid_product(std::span<const double> t, std::span<const double> f,
                         std::span<const double> g) {
  return scalar::trapezoid_product(t, f, g);
}
MassMoments mass_moments(const MassCloud& cloud, const std::array<double, 3>& origin) {
  return scalar::mass_moments(cloud, origin);
}
}  // namespace avx2
#endif

bool avx2::available() {
#if defined(INVIS_HAVE_AVX2_KERNELS)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported;
#else
  return false;
#endif
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() { return avx2::available() ? Isa::kAvx2 : Isa::kScalar; }

Isa active_isa() {
  static const Isa isa = [] {
    const char* env = std::getenv("INVIS_ISA");
    if (env != nullptr && std::string(env) == "scalar") return Isa::kScalar;
    return detected_isa();
  }();
  return isa;
}

double trapezoid_product(std::span<const double> t, std::span<const double> f,
                         std::span<const double> g) {
  if (active_isa() == Isa::kAvx2) return avx2::trapezoid_product(t, f, g);
  return scalar::trapezoid_product(t, f, g);
}

MassMoments mass_moments(const MassCloud& cloud, const std::array<double, 3>& origin) {
  if (active_isa() == Isa::kAvx2) return avx2::mass_moments(cloud, origin);
  return scalar::mass_moments(cloud, origin);
}

}  // namespace invis::kernels
