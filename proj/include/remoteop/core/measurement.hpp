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
#include <span>
#include <variant>
#include <vector>

#include "remoteop/core/state_vector.hpp"

namespace remoteop {

// Branches below this probability are treated as impossible.
inline constexpr double kZeroBranchThreshold = 1e-12;

struct MeasurementOutcome {
  std::vector<int> qudits;  // measured positions, first = most significant digit
  std::size_t value = 0;    // outcome label in [0, d^qudits.size())
  double probability = 0.0; // Born probability before renormalization
};

struct Sample {
  std::uint64_t seed = 0;
};
struct Forced {
  std::size_t value = 0;
};
struct EnumerateAll {};

using MeasurePolicy = std::variant<Sample, Forced, EnumerateAll>;

struct MeasuredBranch {
  MeasurementOutcome outcome;
  StateVector state;
};

// Probability of every outcome label of the targets.
std::vector<double> outcome_probabilities(const StateVector& state,
                                          std::span<const int> targets);

// Projects the targets onto |value> and renormalizes. The measured qudits
// stay in the register. Throws ImpossibleOutcome below the zero-branch
// threshold.
MeasuredBranch collapse(const StateVector& state, std::span<const int> targets,
                        std::size_t value);

// Computational-basis measurement of the targets.
//   Sample: one branch drawn from the Born distribution with the seed.
//   Forced: the branch with the given label.
//   EnumerateAll: every branch above the zero-branch threshold, by label.
std::vector<MeasuredBranch> measure(const StateVector& state,
                                    std::span<const int> targets,
                                    const MeasurePolicy& policy);

// Index drawn from a discrete distribution using u in [0, 1). Skips
// entries below the zero-branch threshold.
std::size_t pick_outcome(std::span<const double> probabilities, double u);

}  // namespace remoteop
