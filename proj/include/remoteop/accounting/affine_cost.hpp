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

#include <string>

#include "remoteop/protocol/resources.hpp"

namespace remoteop {

/// c0 + cN * N + cM * M with integer coefficients.
struct Affine {
  long constant = 0;
  long n = 0;
  long m = 0;

  static constexpr Affine N(long k = 1) { return {0, k, 0}; }
  static constexpr Affine M(long k = 1) { return {0, 0, k}; }
  static constexpr Affine value(long k) { return {k, 0, 0}; }

  long evaluate(long n_value, long m_value) const { return constant + n * n_value + m * m_value; }
  bool is_zero() const { return constant == 0 && n == 0 && m == 0; }

  friend constexpr Affine operator+(Affine a, Affine b) {
    return {a.constant + b.constant, a.n + b.n, a.m + b.m};
  }
  friend constexpr Affine operator-(Affine a, Affine b) {
    return {a.constant - b.constant, a.n - b.n, a.m - b.m};
  }
  friend constexpr Affine operator-(Affine a) { return {-a.constant, -a.n, -a.m}; }
  friend constexpr Affine operator*(long k, Affine a) { return {k * a.constant, k * a.n, k * a.m}; }
  bool operator==(const Affine&) const = default;
};

// Canonical form: no spaces, N term then M term then constant, zero terms
// omitted, unit coefficients omitted ("N+4M", "-N", "2N+4M", "1", "0").
std::string to_string(const Affine& a);

/// Directional communication cost, each counter affine in (N, M).
struct AffineCost {
  Affine qudits_b_to_a;
  Affine qudits_a_to_b;
  Affine cbits_b_to_a;
  Affine cbits_a_to_b;
  Affine ebits;

  Affine total_qudits() const { return qudits_b_to_a + qudits_a_to_b; }
  Affine total_cbits() const { return cbits_b_to_a + cbits_a_to_b; }

  // Throws std::domain_error if a counter evaluates negative.
  ResourceVector evaluate(long n_value, long m_value) const;

  friend AffineCost operator-(const AffineCost& a, const AffineCost& b) {
    return {a.qudits_b_to_a - b.qudits_b_to_a, a.qudits_a_to_b - b.qudits_a_to_b,
            a.cbits_b_to_a - b.cbits_b_to_a, a.cbits_a_to_b - b.cbits_a_to_b, a.ebits - b.ebits};
  }
  friend AffineCost operator-(const AffineCost& a) { return AffineCost{} - a; }
  bool operator==(const AffineCost&) const = default;
};

enum class Scenario { QubitTransmission, SharedEntanglement };

std::string_view scenario_name(Scenario s);

/// A cost tagged with the communication model it is stated in. A
/// qubit-transmission cost carries no ebits; a shared-entanglement cost
/// sends no qubits.
class ScenarioCost {
 public:
  // Throws std::domain_error when the cost violates the scenario.
  ScenarioCost(Scenario scenario, AffineCost cost);

  Scenario scenario() const { return scenario_; }
  const AffineCost& cost() const { return cost_; }

  bool operator==(const ScenarioCost&) const = default;

 private:
  Scenario scenario_;
  AffineCost cost_;
};

// Teleports every transmitted qubit: one ebit each, plus two cbits in the
// qubit's direction of travel. Throws std::domain_error for a cost already
// in the shared-entanglement scenario.
ScenarioCost to_shared_entanglement(const ScenarioCost& cost);

// Distributes each ebit by sending one half of a locally prepared pair.
// The pairs are charged as qubits from Bob to Alice. Throws
// std::domain_error for a cost already in the qubit-transmission scenario.
ScenarioCost to_qubit_transmission(const ScenarioCost& cost);

// upper - lower, coefficient-wise. Throws std::domain_error when the
// scenarios differ.
AffineCost gap(const ScenarioCost& upper, const ScenarioCost& lower);

}  // namespace remoteop
