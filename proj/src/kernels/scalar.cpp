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

#include <vector>

#include "remoteop/kernels/kernels.hpp"

namespace remoteop::kernels {
namespace {

// Complex products are spelled out so the reference does not depend on the
// library's Annex G handling of infinities.
inline void mul_acc(double& acc_re, double& acc_im, const Complex& m,
                    const Complex& v) {
  acc_re += m.real() * v.real() - m.imag() * v.imag();
  acc_im += m.real() * v.imag() + m.imag() * v.real();
}

void apply_dense_scalar(std::span<Complex> amps,
                        std::span<const std::size_t> bases,
                        std::span<const std::size_t> offsets,
                        std::span<const Complex> matrix) {
  const std::size_t dim = offsets.size();
  std::vector<Complex> in(dim);
  for (const std::size_t base : bases) {
    for (std::size_t c = 0; c < dim; ++c) in[c] = amps[base + offsets[c]];
    for (std::size_t r = 0; r < dim; ++r) {
      double re = 0.0;
      double im = 0.0;
      const Complex* row = matrix.data() + r * dim;
      for (std::size_t c = 0; c < dim; ++c) mul_acc(re, im, row[c], in[c]);
      amps[base + offsets[r]] = Complex(re, im);
    }
  }
}

double norm_squared_scalar(std::span<const Complex> amps) {
  double sum = 0.0;
  for (const Complex& a : amps) sum += a.real() * a.real() + a.imag() * a.imag();
  return sum;
}

void scale_scalar(std::span<Complex> amps, double factor) {
  for (Complex& a : amps) a = Complex(a.real() * factor, a.imag() * factor);
}

Complex inner_product_scalar(std::span<const Complex> a,
                             std::span<const Complex> b) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{apply_dense_scalar, norm_squared_scalar,
                                 scale_scalar, inner_product_scalar};
  return table;
}

}  // namespace remoteop::kernels
