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

// Reference computations for the tests. Everything here is written from the
// definitions with plain loops over basis labels, deliberately sharing no
// code with the strided kernels or with build_matrix.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "remoteop/core/gate_matrix.hpp"
#include "remoteop/core/rng.hpp"
#include "remoteop/core/state_vector.hpp"
#include "remoteop/restricted/restricted_operation.hpp"

namespace remoteop::testing {

// Digits of `label` in base d, n digits, most significant first.
inline std::vector<int> digits_of(std::size_t label, int d, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(label % static_cast<std::size_t>(d));
    label /= static_cast<std::size_t>(d);
  }
  return out;
}

inline std::size_t label_of(const std::vector<int>& digits, int d) {
  std::size_t v = 0;
  for (int x : digits) v = v * static_cast<std::size_t>(d) + static_cast<std::size_t>(x);
  return v;
}

inline std::size_t ipow(int d, int n) {
  std::size_t v = 1;
  for (int i = 0; i < n; ++i) v *= static_cast<std::size_t>(d);
  return v;
}

// The full d^n x d^n matrix of `gate` acting on `targets` (targets[0] the
// most significant digit of the gate label), identity elsewhere. Entry
// (row, col) is gate[sub(row), sub(col)] when every non-target digit of
// row and col agrees, zero otherwise.
inline Matrix expand(const Matrix& gate, int d, int n, const std::vector<int>& targets) {
  const std::size_t size = ipow(d, n);
  Matrix full = Matrix::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  std::vector<bool> is_target(static_cast<std::size_t>(n), false);
  for (int t : targets) is_target[static_cast<std::size_t>(t)] = true;
  for (std::size_t row = 0; row < size; ++row) {
    const std::vector<int> rd = digits_of(row, d, n);
    for (std::size_t col = 0; col < size; ++col) {
      const std::vector<int> cd = digits_of(col, d, n);
      bool spectators_agree = true;
      for (int q = 0; q < n; ++q) {
        if (!is_target[static_cast<std::size_t>(q)] &&
            rd[static_cast<std::size_t>(q)] != cd[static_cast<std::size_t>(q)]) {
          spectators_agree = false;
          break;
        }
      }
      if (!spectators_agree) continue;
      std::size_t r = 0;
      std::size_t c = 0;
      for (int t : targets) {
        r = r * static_cast<std::size_t>(d) + static_cast<std::size_t>(rd[static_cast<std::size_t>(t)]);
        c = c * static_cast<std::size_t>(d) + static_cast<std::size_t>(cd[static_cast<std::size_t>(t)]);
      }
      full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          gate(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return full;
}

inline std::vector<Complex> matvec(const Matrix& m, std::span<const Complex> v) {
  std::vector<Complex> out(v.size(), Complex(0.0, 0.0));
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      out[r] += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * v[c];
    }
  }
  return out;
}

// U(f, G)|psi> straight from the definition:
//   out[f(x) * D + r] = sum_c G(x)[r][c] * in[x * D + c],  D = d^M.
inline std::vector<Complex> restricted_apply(const RestrictedOperation& op,
                                             std::span<const Complex> in) {
  const std::size_t block = ipow(op.dim(), op.m_block());
  std::vector<Complex> out(in.size(), Complex(0.0, 0.0));
  for (std::size_t x = 0; x < op.num_labels(); ++x) {
    const std::size_t fx = op.permutation()(x);
    const GateMatrix& g = op.block(x);
    for (std::size_t r = 0; r < block; ++r) {
      for (std::size_t c = 0; c < block; ++c) {
        out[fx * block + r] += g(r, c) * in[x * block + c];
      }
    }
  }
  return out;
}

inline StateVector restricted_oracle(const RestrictedOperation& op, const StateVector& input) {
  return StateVector(input.dim(), input.num_qudits(), restricted_apply(op, input.amplitudes()));
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// A random unitary that does not go through haar_unitary: Gram-Schmidt on
// a matrix of uniform entries.
inline Matrix gram_schmidt_unitary(Rng& rng, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix m(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) m(r, c) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
  }
  // Two projection passes keep the columns orthogonal to rounding.
  for (Eigen::Index c = 0; c < n; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index p = 0; p < c; ++p) m.col(c) -= m.col(p).dot(m.col(c)) * m.col(p);
    }
    m.col(c) /= m.col(c).norm();
  }
  return m;
}

}  // namespace remoteop::testing
