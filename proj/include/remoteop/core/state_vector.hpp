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
#include <initializer_list>
#include <span>
#include <vector>

#include "remoteop/core/gate_matrix.hpp"

namespace remoteop {

class Rng;

inline constexpr double kNormTolerance = 1e-10;

// d^n, throwing std::domain_error when d < 2, n < 0 or the result would not
// fit a dense amplitude array.
std::size_t checked_power(int d, int n);

/// Dense amplitudes of n qudits of dimension d.
///
/// Basis label j of qudits (q_0, ..., q_{n-1}) is sum_i q_i * d^(n-1-i):
/// qudit 0 is the most significant digit. The norm is 1 within
/// kNormTolerance after every public operation.
class StateVector {
 public:
  StateVector(int dim, int num_qudits, std::vector<Complex> amps);

  static StateVector basis(int dim, int num_qudits, std::size_t label);

  // Haar-random pure state.
  static StateVector random(Rng& rng, int dim, int num_qudits);

  int dim() const { return dim_; }
  int num_qudits() const { return num_qudits_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::size_t index) const { return amps_[index]; }

  double norm_squared() const;

  // Weight of the digit for qudit `position` in a basis label.
  std::size_t place_value(int position) const;
  int digit(std::size_t label, int position) const;

  // Applies gate to the ordered targets in place. targets[0] is the most
  // significant digit of the gate's basis labels.
  void apply(const GateMatrix& gate, std::span<const int> targets);

  // |this> (x) |rhs>; rhs's qudits are appended after this one's.
  StateVector tensor(const StateVector& rhs) const;

  // Drops a qudit that sits in a computational basis state. Throws
  // std::domain_error if it is not in a product state |k> with the rest.
  StateVector without_qudit(int position) const;

  // New qudit i is old qudit order[i]. order must be a permutation of
  // 0..n-1.
  StateVector reordered(std::span<const int> order) const;

 private:
  void check_norm(const char* where) const;
  std::vector<std::size_t> validated_targets(std::span<const int> targets) const;

  int dim_;
  int num_qudits_;
  std::vector<Complex> amps_;
};

StateVector basis_state(int dim, int num_qudits, std::size_t label);

StateVector apply_gate(StateVector state, const GateMatrix& gate,
                       std::span<const int> targets);

inline StateVector apply_gate(StateVector state, const GateMatrix& gate,
                              std::initializer_list<int> targets) {
  return apply_gate(std::move(state), gate,
                    std::span<const int>(targets.begin(), targets.size()));
}

enum class Comparison { Exact, UpToGlobalPhase };

// Exact: max_i |a_i - b_i| <= tol. UpToGlobalPhase: b is first rotated so
// its largest-magnitude amplitude has the same phase as a's at that index.
// Throws std::domain_error on a shape mismatch.
bool equal_states(const StateVector& a, const StateVector& b, Comparison mode,
                  double tol);

// max_i |a_i - b_i|; shapes must match.
double max_deviation(const StateVector& a, const StateVector& b);

}  // namespace remoteop
