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

#include "remoteop/restricted/restricted_operation.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "remoteop/core/rng.hpp"
#include "remoteop/core/state_vector.hpp"

namespace remoteop {

RestrictedOperation::RestrictedOperation(int d, int n_perm, int m_block, Permutation f,
                                         std::vector<GateMatrix> blocks)
    : d_(d), n_perm_(n_perm), m_block_(m_block), f_(std::move(f)), blocks_(std::move(blocks)) {
  if (n_perm < 1) throw std::domain_error("RestrictedOperation: N must be >= 1");
  if (m_block < 0) throw std::domain_error("RestrictedOperation: M must be >= 0");
  const std::size_t labels = checked_power(d, n_perm);
  const std::size_t block_dim = checked_power(d, m_block);
  if (f_.size() != labels) {
    throw std::domain_error("RestrictedOperation: permutation acts on " +
                            std::to_string(f_.size()) + " labels, expected " +
                            std::to_string(labels));
  }
  if (blocks_.size() != labels) {
    throw std::domain_error("RestrictedOperation: " + std::to_string(blocks_.size()) +
                            " blocks given, expected " + std::to_string(labels));
  }
  for (const GateMatrix& g : blocks_) {
    if (g.dim() != block_dim) {
      throw std::domain_error("RestrictedOperation: block of dimension " +
                              std::to_string(g.dim()) + ", expected " +
                              std::to_string(block_dim));
    }
  }
}

RestrictedOperation RestrictedOperation::from_phases(int d, int n_perm, Permutation f,
                                                     std::span<const double> phases) {
  std::vector<GateMatrix> blocks;
  blocks.reserve(phases.size());
  for (const double phi : phases) {
    Matrix m(1, 1);
    m(0, 0) = std::polar(1.0, phi);
    blocks.emplace_back(std::move(m));
  }
  return RestrictedOperation(d, n_perm, 0, std::move(f), std::move(blocks));
}

RestrictedOperation RestrictedOperation::identity(int d, int n_perm, int m_block) {
  const std::size_t labels = checked_power(d, n_perm);
  std::vector<GateMatrix> blocks(labels, GateMatrix::identity(checked_power(d, m_block)));
  return RestrictedOperation(d, n_perm, m_block, Permutation::identity(labels),
                             std::move(blocks));
}

std::vector<double> RestrictedOperation::phases() const {
  std::vector<double> out;
  out.reserve(blocks_.size());
  for (const GateMatrix& g : blocks_) out.push_back(std::arg(g(0, 0)));
  return out;
}

GateMatrix build_matrix(const RestrictedOperation& op) {
  const auto block = static_cast<Eigen::Index>(op.block_dim());
  const auto labels = static_cast<Eigen::Index>(op.num_labels());
  Matrix m = Matrix::Zero(labels * block, labels * block);
  for (Eigen::Index x = 0; x < labels; ++x) {
    const auto row = static_cast<Eigen::Index>(op.permutation()(static_cast<std::size_t>(x)));
    m.block(row * block, x * block, block, block) = op.block(static_cast<std::size_t>(x)).entries();
  }
  return GateMatrix(std::move(m));
}

std::optional<RestrictedOperation> classify(const Matrix& matrix, int d, int n_perm, int m_block) {
  if (n_perm < 1 || m_block < 0) throw std::domain_error("classify: need N >= 1 and M >= 0");
  const auto labels = static_cast<Eigen::Index>(checked_power(d, n_perm));
  const auto block = static_cast<Eigen::Index>(checked_power(d, m_block));
  if (matrix.rows() != labels * block || matrix.cols() != labels * block) {
    throw std::domain_error("classify: matrix is " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + ", expected dimension " +
                            std::to_string(labels * block));
  }
  if (!is_unitary(matrix)) throw std::domain_error("classify: matrix is not unitary");

  std::vector<std::size_t> map(static_cast<std::size_t>(labels));
  std::vector<GateMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(labels));
  for (Eigen::Index x = 0; x < labels; ++x) {
    Eigen::Index found = -1;
    for (Eigen::Index y = 0; y < labels; ++y) {
      const double peak = matrix.block(y * block, x * block, block, block).cwiseAbs().maxCoeff();
      if (peak > kBlockThreshold) {
        if (found >= 0) return std::nullopt;
        found = y;
      }
    }
    if (found < 0) return std::nullopt;
    map[static_cast<std::size_t>(x)] = static_cast<std::size_t>(found);
    try {
      blocks.emplace_back(Matrix(matrix.block(found * block, x * block, block, block)));
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  }
  try {
    return RestrictedOperation(d, n_perm, m_block, Permutation(std::move(map)), std::move(blocks));
  } catch (const std::domain_error&) {
    // Two columns landed in the same block-row.
    return std::nullopt;
  }
}

std::optional<RestrictedOperation> classify(const GateMatrix& matrix, int d, int n_perm,
                                            int m_block) {
  return classify(matrix.entries(), d, n_perm, m_block);
}

GateMatrix haar_unitary(Rng& rng, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix z(n, n);
  // Column-major fill order, fixed so fixtures are reproducible.
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) z(r, c) = rng.complex_normal();
  }
  const Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    q.col(i) *= (mag > 0.0 ? diag / mag : Complex(1.0, 0.0));
  }
  return GateMatrix(std::move(q));
}

RestrictedOperation random_restricted(std::uint64_t seed, int d, int n_perm, int m_block) {
  if (n_perm < 1 || m_block < 0) throw std::domain_error("random_restricted: need N >= 1 and M >= 0");
  Rng rng(seed);
  const std::size_t labels = checked_power(d, n_perm);
  const std::size_t block_dim = checked_power(d, m_block);
  Permutation f = Permutation::random(rng, labels);
  std::vector<GateMatrix> blocks;
  blocks.reserve(labels);
  for (std::size_t x = 0; x < labels; ++x) blocks.push_back(haar_unitary(rng, block_dim));
  return RestrictedOperation(d, n_perm, m_block, std::move(f), std::move(blocks));
}

RestrictedOperation controlled_u(int num_controls, const GateMatrix& u) {
  if (num_controls < 1) throw std::domain_error("controlled_u: need at least one control");
  if (u.dim() != 2) throw std::domain_error("controlled_u: u must be a one-qubit gate");
  const std::size_t labels = checked_power(2, num_controls);
  std::vector<GateMatrix> blocks(labels, GateMatrix::identity(2));
  blocks.back() = u;
  return RestrictedOperation(2, num_controls, 1, Permutation::identity(labels), std::move(blocks));
}

RestrictedOperation u_diag(double phi) {
  const double phases[] = {phi, -phi};
  return RestrictedOperation::from_phases(2, 1, Permutation::identity(2), phases);
}

RestrictedOperation u_anti(double phi) {
  // Column 0 lands in row 1 as -e^{-i phi}: phase pi - phi.
  const double phases[] = {std::numbers::pi - phi, phi};
  return RestrictedOperation::from_phases(2, 1, Permutation({1, 0}), phases);
}

bool same_operation(const RestrictedOperation& a, const RestrictedOperation& b, double tol) {
  if (a.dim() != b.dim() || a.n_perm() != b.n_perm() || a.m_block() != b.m_block()) return false;
  if (!(a.permutation() == b.permutation())) return false;
  for (std::size_t x = 0; x < a.num_labels(); ++x) {
    if ((a.block(x).entries() - b.block(x).entries()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace remoteop
