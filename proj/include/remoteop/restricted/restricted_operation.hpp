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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "remoteop/core/gate_matrix.hpp"
#include "remoteop/restricted/permutation.hpp"

namespace remoteop {

class Rng;

/// Block-permutation unitary on N + M qudits of dimension d:
///
///   U(f, G) = sum_x |f(x)><x| (x) G(x),   x in [0, d^N)
///
/// f permutes the labels of the first N qudits; each G(x) is a d^M x d^M
/// unitary acting on the last M. With M = 0 every block is a 1x1 phase
/// e^{i phi(x)}, which covers the permutation-with-phases family.
class RestrictedOperation {
 public:
  // Throws std::domain_error when f has the wrong size, a block count or
  // block dimension is off, N < 1 or M < 0.
  RestrictedOperation(int d, int n_perm, int m_block, Permutation f,
                      std::vector<GateMatrix> blocks);

  // M = 0 operation with blocks e^{i phases[x]}.
  static RestrictedOperation from_phases(int d, int n_perm, Permutation f,
                                         std::span<const double> phases);

  static RestrictedOperation identity(int d, int n_perm, int m_block);

  int dim() const { return d_; }
  int n_perm() const { return n_perm_; }
  int m_block() const { return m_block_; }
  int total_qudits() const { return n_perm_ + m_block_; }
  std::size_t num_labels() const { return f_.size(); }
  std::size_t block_dim() const { return blocks_.front().dim(); }

  const Permutation& permutation() const { return f_; }
  const std::vector<GateMatrix>& blocks() const { return blocks_; }
  const GateMatrix& block(std::size_t x) const { return blocks_[x]; }

  // arg G(x) for every x. Only meaningful when M = 0.
  std::vector<double> phases() const;

 private:
  int d_;
  int n_perm_;
  int m_block_;
  Permutation f_;
  std::vector<GateMatrix> blocks_;
};

// Dense d^(N+M) matrix. Block (f(x), x) is G(x); every other block is zero.
GateMatrix build_matrix(const RestrictedOperation& op);

// Block threshold used by classify: a block is non-zero when its largest
// entry magnitude exceeds this.
inline constexpr double kBlockThreshold = 1e-9;

// Recovers (f, G) from a dense matrix, or nullopt when the matrix does not
// have exactly one non-zero d^M x d^M block per block-row and block-column.
// Throws std::domain_error for a non-unitary or wrongly sized matrix.
std::optional<RestrictedOperation> classify(const Matrix& matrix, int d,
                                            int n_perm, int m_block);
std::optional<RestrictedOperation> classify(const GateMatrix& matrix, int d,
                                            int n_perm, int m_block);

// Haar-random unitary: QR of a complex Gaussian matrix with the phases of
// R's diagonal moved into Q.
GateMatrix haar_unitary(Rng& rng, std::size_t dim);

// Uniform f and Haar-random blocks, deterministic in the seed.
RestrictedOperation random_restricted(std::uint64_t seed, int d, int n_perm,
                                      int m_block);

// Qubit gate with num_controls controls and one target, the target last:
// G(x) = I except G(2^num_controls - 1) = u.
RestrictedOperation controlled_u(int num_controls, const GateMatrix& u);

// diag(e^{i phi}, e^{-i phi}).
RestrictedOperation u_diag(double phi);

// [[0, e^{i phi}], [-e^{-i phi}, 0]].
RestrictedOperation u_anti(double phi);

// f equal and every block within tol entrywise.
bool same_operation(const RestrictedOperation& a, const RestrictedOperation& b,
                    double tol);

}  // namespace remoteop
