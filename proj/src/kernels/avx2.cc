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

#include <immintrin.h>

#include "invis/kernels.h"

namespace invis::kernels::avx2 {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

double trapezoid_product(std::span<const double> t, std::span<const double> f,
                         std::span<const double> g) {
  const std::size_t n = t.size();
  if (n < 2) return 0.0;
  const std::size_t intervals = n - 1;
  const double* tp = t.data();
  const double* fp = f.data();
  const double* gp = g.data();

  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= intervals; i += 4) {
    const __m256d t0 = _mm256_loadu_pd(tp + i);
    const __m256d t1 = _mm256_loadu_pd(tp + i + 1);
    const __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(fp + i), _mm256_loadu_pd(gp + i));
    const __m256d p1 = _mm256_mul_pd(_mm256_loadu_pd(fp + i + 1), _mm256_loadu_pd(gp + i + 1));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_sub_pd(t1, t0), _mm256_add_pd(p0, p1)));
  }
  double sum = hsum(acc);
  for (; i < intervals; ++i) {
    sum += (tp[i + 1] - tp[i]) * (fp[i] * gp[i] + fp[i + 1] * gp[i + 1]);
  }
  return 0.5 * sum;
}

MassMoments mass_moments(const MassCloud& cloud, const std::array<double, 3>& origin) {
  const std::size_t n = cloud.m.size();
  const double* mp = cloud.m.data();
  const double* xp = cloud.x.data();
  const double* yp = cloud.y.data();
  const double* zp = cloud.z.data();

  const __m256d ox = _mm256_set1_pd(origin[0]);
  const __m256d oy = _mm256_set1_pd(origin[1]);
  const __m256d oz = _mm256_set1_pd(origin[2]);
  __m256d s_m = _mm256_setzero_pd();
  __m256d s_x = _mm256_setzero_pd(), s_y = _mm256_setzero_pd(), s_z = _mm256_setzero_pd();
  __m256d s_xx = _mm256_setzero_pd(), s_yy = _mm256_setzero_pd(), s_zz = _mm256_setzero_pd();
  __m256d s_xy = _mm256_setzero_pd(), s_xz = _mm256_setzero_pd(), s_yz = _mm256_setzero_pd();

  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d m = _mm256_loadu_pd(mp + j);
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xp + j), ox);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(yp + j), oy);
    const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(zp + j), oz);
    const __m256d mx = _mm256_mul_pd(m, dx);
    const __m256d my = _mm256_mul_pd(m, dy);
    const __m256d mz = _mm256_mul_pd(m, dz);
    s_m = _mm256_add_pd(s_m, m);
    s_x = _mm256_add_pd(s_x, mx);
    s_y = _mm256_add_pd(s_y, my);
    s_z = _mm256_add_pd(s_z, mz);
    s_xx = _mm256_add_pd(s_xx, _mm256_mul_pd(mx, dx));
    s_yy = _mm256_add_pd(s_yy, _mm256_mul_pd(my, dy));
    s_zz = _mm256_add_pd(s_zz, _mm256_mul_pd(mz, dz));
    s_xy = _mm256_add_pd(s_xy, _mm256_mul_pd(mx, dy));
    s_xz = _mm256_add_pd(s_xz, _mm256_mul_pd(mx, dz));
    s_yz = _mm256_add_pd(s_yz, _mm256_mul_pd(my, dz));
  }

  MassMoments out;
  out.mass = hsum(s_m);
  out.first = {hsum(s_x), hsum(s_y), hsum(s_z)};
  out.second = {hsum(s_xx), hsum(s_yy), hsum(s_zz), hsum(s_xy), hsum(s_xz), hsum(s_yz)};
  for (; j < n; ++j) {
    const double m = mp[j];
    const double dx = xp[j] - origin[0];
    const double dy = yp[j] - origin[1];
    const double dz = zp[j] - origin[2];
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

}  // namespace invis::kernels::avx2
