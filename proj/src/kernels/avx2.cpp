// Copyright 2026 The remoteop Authors
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

// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after a runtime CPU check (see dispatch.cpp).

#include <immintrin.h>

#include <vector>

#include "remoteop/kernels/kernels.hpp"

namespace remoteop::kernels {
namespace {

// One __m256d holds two complex doubles: [re0, im0, re1, im1].

inline __m256d load_pair(const double* lo, const double* hi) {
  return _mm256_set_m128d(_mm_loadu_pd(hi), _mm_loadu_pd(lo));
}

inline void store_pair(double* lo, double* hi, __m256d v) {
  _mm_storeu_pd(lo, _mm256_castpd256_pd128(v));
  _mm_storeu_pd(hi, _mm256_extractf128_pd(v, 1));
}

// v * m for a broadcast complex scalar m, lane-wise on both complex slots.
inline __m256d complex_mul_broadcast(__m256d v, __m256d m_re, __m256d m_im) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(v, m_re, _mm256_mul_pd(swapped, m_im));
}

inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Two bases are processed per iteration: the low complex slot belongs to
// bases[b], the high slot to bases[b + 1].
void apply_dense_avx2(std::span<Complex> amps,
                      std::span<const std::size_t> bases,
                      std::span<const std::size_t> offsets,
                      std::span<const Complex> matrix) {
  const std::size_t dim = offsets.size();
  double* a = reinterpret_cast<double*>(amps.data());
  const double* m = reinterpret_cast<const double*>(matrix.data());
  // Gathered inputs, four doubles (two complex slots) per column.
  std::vector<double> in(4 * dim);

  std::size_t b = 0;
  for (; b + 2 <= bases.size(); b += 2) {
    const std::size_t b0 = bases[b];
    const std::size_t b1 = bases[b + 1];
    for (std::size_t c = 0; c < dim; ++c) {
      _mm256_storeu_pd(in.data() + 4 * c,
                       load_pair(a + 2 * (b0 + offsets[c]), a + 2 * (b1 + offsets[c])));
    }
    for (std::size_t r = 0; r < dim; ++r) {
      __m256d acc = _mm256_setzero_pd();
      const double* row = m + 2 * r * dim;
      for (std::size_t c = 0; c < dim; ++c) {
        const __m256d m_re = _mm256_broadcast_sd(row + 2 * c);
        const __m256d m_im = _mm256_broadcast_sd(row + 2 * c + 1);
        const __m256d v = _mm256_loadu_pd(in.data() + 4 * c);
        acc = _mm256_add_pd(acc, complex_mul_broadcast(v, m_re, m_im));
      }
      store_pair(a + 2 * (b0 + offsets[r]), a + 2 * (b1 + offsets[r]), acc);
    }
  }
  if (b < bases.size()) {
    scalar_table().apply_dense(amps, bases.subspan(b), offsets, matrix);
  }
}

double norm_squared_avx2(std::span<const Complex> amps) {
  const double* a = reinterpret_cast<const double*>(amps.data());
  const std::size_t n = amps.size() * 2;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(a + i);
    const __m256d v1 = _mm256_loadu_pd(a + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  double sum = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * a[i];
  return sum;
}

void scale_avx2(std::span<Complex> amps, double factor) {
  double* a = reinterpret_cast<double*>(amps.data());
  const std::size_t n = amps.size() * 2;
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(a + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), f));
  }
  for (; i < n; ++i) a[i] *= factor;
}

Complex inner_product_avx2(std::span<const Complex> lhs,
                           std::span<const Complex> rhs) {
  const double* a = reinterpret_cast<const double*>(lhs.data());
  const double* b = reinterpret_cast<const double*>(rhs.data());
  const std::size_t n = lhs.size() * 2;
  // re: sum of a*b over all lanes. im: a * swap(b) gives
  // [ar*bi, ai*br, ...]; the imaginary part is even lanes minus odd lanes.
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im);
  }
  double re = horizontal_sum(acc_re);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc_im);
  double im = (lanes[0] - lanes[1]) + (lanes[2] - lanes[3]);
  for (; i < n; i += 2) {
    re += a[i] * b[i] + a[i + 1] * b[i + 1];
    im += a[i] * b[i + 1] - a[i + 1] * b[i];
  }
  return {re, im};
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{apply_dense_avx2, norm_squared_avx2,
                                 scale_avx2, inner_product_avx2};
  return table;
}

}  // namespace remoteop::kernels
