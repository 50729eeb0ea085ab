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

#include "remoteop/core/gate_matrix.hpp"

#include <stdexcept>
#include <string>

namespace remoteop {

double unitarity_error(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::domain_error("unitarity_error: matrix is not square");
  }
  const Matrix residual = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return residual.cwiseAbs().maxCoeff();
}

GateMatrix::GateMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw std::domain_error("GateMatrix: expected a non-empty square matrix, got " +
                            std::to_string(entries_.rows()) + "x" +
                            std::to_string(entries_.cols()));
  }
  const double err = unitarity_error(entries_);
  if (!(err <= tol)) {
    throw std::domain_error("GateMatrix: matrix is not unitary (max |U^dag U - I| = " +
                            std::to_string(err) + ")");
  }
}

GateMatrix GateMatrix::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return GateMatrix(Matrix::Identity(n, n));
}

GateMatrix GateMatrix::adjoint() const { return GateMatrix(entries_.adjoint()); }

GateMatrix GateMatrix::power(unsigned exponent) const {
  Matrix result = Matrix::Identity(entries_.rows(), entries_.cols());
  for (unsigned i = 0; i < exponent; ++i) result = result * entries_;
  return GateMatrix(std::move(result));
}

GateMatrix GateMatrix::operator*(const GateMatrix& rhs) const {
  if (rhs.dim() != dim()) throw std::domain_error("GateMatrix: dimension mismatch in product");
  return GateMatrix(entries_ * rhs.entries_);
}

std::vector<Complex> GateMatrix::row_major() const {
  const std::size_t n = dim();
  std::vector<Complex> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out[r * n + c] = (*this)(r, c);
  }
  return out;
}

}  // namespace remoteop
