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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

namespace remoteop {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kUnitarityTolerance = 1e-10;

// max_ij |(M^dagger M - I)_ij|. M must be square.
double unitarity_error(const Matrix& m);

inline bool is_unitary(const Matrix& m, double tol = kUnitarityTolerance) {
  return m.rows() == m.cols() && unitarity_error(m) <= tol;
}

/// A square unitary matrix. Unitarity is checked once, at construction.
class GateMatrix {
 public:
  // Throws std::domain_error if entries is not square or not unitary within
  // tol.
  explicit GateMatrix(Matrix entries, double tol = kUnitarityTolerance);

  static GateMatrix identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row),
                    static_cast<Eigen::Index>(col));
  }

  GateMatrix adjoint() const;
  GateMatrix power(unsigned exponent) const;
  GateMatrix operator*(const GateMatrix& rhs) const;

  // Row-major copy, the layout the kernels consume.
  std::vector<Complex> row_major() const;

 private:
  Matrix entries_;
};

}  // namespace remoteop
