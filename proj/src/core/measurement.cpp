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

#include "remoteop/core/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "remoteop/core/errors.hpp"
#include "remoteop/core/rng.hpp"
#include "remoteop/kernels/kernels.hpp"

namespace remoteop {

namespace {

struct TargetLayout {
  std::vector<std::size_t> weights;
  std::size_t outcomes = 1;
};

TargetLayout layout_of(const StateVector& state, std::span<const int> targets) {
  TargetLayout layout;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const int t = targets[i];
    if (t < 0 || t >= state.num_qudits()) {
      throw std::domain_error("measure: target qudit " + std::to_string(t) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[j] == t) throw std::domain_error("measure: duplicate target " + std::to_string(t));
    }
    layout.weights.push_back(state.place_value(t));
  }
  layout.outcomes = checked_power(state.dim(), static_cast<int>(targets.size()));
  return layout;
}

std::size_t outcome_label(std::size_t label, const TargetLayout& layout, std::size_t d) {
  std::size_t value = 0;
  for (const std::size_t w : layout.weights) value = value * d + (label / w) % d;
  return value;
}

}  // namespace

std::vector<double> outcome_probabilities(const StateVector& state, std::span<const int> targets) {
  const TargetLayout layout = layout_of(state, targets);
  const auto d = static_cast<std::size_t>(state.dim());
  std::vector<double> probs(layout.outcomes, 0.0);
  const auto amps = state.amplitudes();
  for (std::size_t label = 0; label < amps.size(); ++label) {
    probs[outcome_label(label, layout, d)] += std::norm(amps[label]);
  }
  return probs;
}

MeasuredBranch collapse(const StateVector& state, std::span<const int> targets, std::size_t value) {
  const TargetLayout layout = layout_of(state, targets);
  if (value >= layout.outcomes) {
    throw std::domain_error("measure: outcome " + std::to_string(value) + " out of range");
  }
  const auto d = static_cast<std::size_t>(state.dim());
  const auto amps = state.amplitudes();
  std::vector<Complex> projected(amps.size());
  for (std::size_t label = 0; label < amps.size(); ++label) {
    if (outcome_label(label, layout, d) == value) projected[label] = amps[label];
  }
  const double probability = kernels::active().norm_squared(projected);
  if (probability < kZeroBranchThreshold) {
    throw ImpossibleOutcome("measure: outcome " + std::to_string(value) +
                            " has probability " + std::to_string(probability));
  }
  kernels::active().scale(projected, 1.0 / std::sqrt(probability));
  return MeasuredBranch{
      MeasurementOutcome{std::vector<int>(targets.begin(), targets.end()), value, probability},
      StateVector(state.dim(), state.num_qudits(), std::move(projected))};
}

std::size_t pick_outcome(std::span<const double> probabilities, double u) {
  double cumulative = 0.0;
  std::size_t last_possible = probabilities.size();
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (probabilities[k] < kZeroBranchThreshold) continue;
    last_possible = k;
    cumulative += probabilities[k];
    if (u < cumulative) return k;
  }
  if (last_possible == probabilities.size()) {
    throw ImpossibleOutcome("measure: every outcome has zero probability");
  }
  // u landed in the rounding gap above the total mass.
  return last_possible;
}

std::vector<MeasuredBranch> measure(const StateVector& state, std::span<const int> targets,
                                    const MeasurePolicy& policy) {
  std::vector<MeasuredBranch> branches;
  if (const auto* sample = std::get_if<Sample>(&policy)) {
    Rng rng(sample->seed);
    const std::vector<double> probs = outcome_probabilities(state, targets);
    branches.push_back(collapse(state, targets, pick_outcome(probs, rng.uniform())));
  } else if (const auto* forced = std::get_if<Forced>(&policy)) {
    branches.push_back(collapse(state, targets, forced->value));
  } else {
    const std::vector<double> probs = outcome_probabilities(state, targets);
    for (std::size_t k = 0; k < probs.size(); ++k) {
      if (probs[k] > kZeroBranchThreshold) branches.push_back(collapse(state, targets, k));
    }
  }
  return branches;
}

}  // namespace remoteop
