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

#include "invis/kernels.h"

namespace invis::kernels::scalar {

double trapezoid_product(std::span<const double> t, std::span<const double> f,
                         std::span<const double> g) {
  const std::size_t n = t.size();
  if (n < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    sum += (t[i + 1] - t[i]) * (f[i] * g[i] + f[i + 1] * g[i + 1]);
  }
  return 0.5 * sum;
}

MassMoments mass_moments(const MassCloud& cloud, const std::array<double, 3>& origin) {
  MassMoments out;
  const std::size_t n = cloud.m.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double m = cloud.m[j];
    const double dx = cloud.x[j] - origin[0];
    const double dy = cloud.y[j] - origin[1];
    const double dz = cloud.z[j] - origin[2];
    out.mass += m;
    out.first[0] += m * dx;
    out.first[1] += m * dy;
    out.first[2] += m * dz;
    out.second[0] += m * dx * dx;
    out.second[1] += m * dy * dy;
    out.second[2] += m * dz * dz;
    out.second[3] += m * dx * dy;
    out.second[4] += m * dx * dz;
    out.second[5] += m * dy * dz;
  }
  return out;
}

}  // namespace invis::kernels::scalar
