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

#include "remoteop/core/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace remoteop {

namespace {

void require_dimension(int d) {
  if (d < 2) throw std::domain_error("qudit dimension must be >= 2, got " + std::to_string(d));
}

// exp(2 pi i k / d) with k reduced mod d first, so that the d-th roots of
// unity are bit-identical wherever they appear.
Complex root_of_unity(long k, int d) {
  const long r = ((k % d) + d) % d;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == d) return {-1.0, 0.0};
  if (4 * r == d) return {0.0, 1.0};
  if (4 * r == 3L * d) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

}  // namespace

GateMatrix generalized_cnot(int d) {
  require_dimension(d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  Matrix m = Matrix::Zero(n, n);
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      const int out = ((x - y) % d + d) % d;
      m(x * d + out, x * d + y) = 1.0;
    }
  }
  return GateMatrix(std::move(m));
}

GateMatrix qft(int d) {
  require_dimension(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix m(d, d);
  for (int y = 0; y < d; ++y) {
    for (int x = 0; x < d; ++x) m(y, x) = root_of_unity(static_cast<long>(x) * y, d) * scale;
  }
  return GateMatrix(std::move(m));
}

GateMatrix s_gate(int d) {
  require_dimension(d);
  Matrix m = Matrix::Zero(d, d);
  for (int x = 0; x < d; ++x) m(x, x) = root_of_unity(-x, d);
  return GateMatrix(std::move(m));
}

GateMatrix hadamard() { return qft(2); }

GateMatrix pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return GateMatrix(std::move(m));
}

GateMatrix pauli_z() { return s_gate(2); }

}  // namespace remoteop
