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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops over amplitude arrays. Every kernel has a scalar
// reference implementation; vector variants are selected at runtime and must
// agree with the reference to rounding (see tests/kernels).

namespace remoteop::kernels {

using Complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend);

struct KernelTable {
  // For every base b and every row r < dim:
  //   amps[b + offsets[r]] <- sum_c matrix[r * dim + c] * amps[b + offsets[c]]
  // matrix is row-major, dim = offsets.size(). The index sets
  // {b + offsets[c]} for distinct bases must be disjoint.
  void (*apply_dense)(std::span<Complex> amps,
                      std::span<const std::size_t> bases,
                      std::span<const std::size_t> offsets,
                      std::span<const Complex> matrix);

  // sum_i |amps[i]|^2
  double (*norm_squared)(std::span<const Complex> amps);

  // amps[i] *= factor
  void (*scale)(std::span<Complex> amps, double factor);

  // sum_i conj(a[i]) * b[i]
  Complex (*inner_product)(std::span<const Complex> a,
                           std::span<const Complex> b);
};

const KernelTable& scalar_table();

// True when the variant was compiled in and the running CPU supports it.
bool is_available(Backend backend);

// Throws std::domain_error when the backend is unavailable.
const KernelTable& table(Backend backend);

// The table used by the simulator. Defaults to the widest available
// backend; REMOTEOP_KERNEL=scalar in the environment forces the reference.
const KernelTable& active();
Backend active_backend();

// Overrides the selection for the current process. Not thread-safe with
// respect to concurrent simulation.
void set_active_backend(Backend backend);

}  // namespace remoteop::kernels
