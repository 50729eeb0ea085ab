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

#include "remoteop/core/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "remoteop/core/rng.hpp"
#include "remoteop/kernels/kernels.hpp"

namespace remoteop {

namespace {

// Dense simulation beyond 2^32 amplitudes is out of reach anyway.
constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 32;

}  // namespace

std::size_t checked_power(int d, int n) {
  if (d < 2) throw std::domain_error("qudit dimension must be >= 2, got " + std::to_string(d));
  if (n < 0) throw std::domain_error("qudit count must be >= 0, got " + std::to_string(n));
  std::size_t result = 1;
  for (int i = 0; i < n; ++i) {
    if (result > kMaxAmplitudes / static_cast<std::size_t>(d)) {
      throw std::domain_error("state of " + std::to_string(n) + " qudits of dimension " +
                              std::to_string(d) + " is too large to simulate densely");
    }
    result *= static_cast<std::size_t>(d);
  }
  return result;
}

StateVector::StateVector(int dim, int num_qudits, std::vector<Complex> amps)
    : dim_(dim), num_qudits_(num_qudits), amps_(std::move(amps)) {
  const std::size_t expected = checked_power(dim, num_qudits);
  if (amps_.size() != expected) {
    throw std::domain_error("StateVector: expected " + std::to_string(expected) +
                            " amplitudes, got " + std::to_string(amps_.size()));
  }
  check_norm("StateVector");
}

StateVector StateVector::basis(int dim, int num_qudits, std::size_t label) {
  const std::size_t size = checked_power(dim, num_qudits);
  if (label >= size) {
    throw std::domain_error("basis_state: label " + std::to_string(label) +
                            " out of range for " + std::to_string(size) + " amplitudes");
  }
  std::vector<Complex> amps(size);
  amps[label] = 1.0;
  return StateVector(dim, num_qudits, std::move(amps));
}

StateVector StateVector::random(Rng& rng, int dim, int num_qudits) {
  std::vector<Complex> amps(checked_power(dim, num_qudits));
  for (Complex& a : amps) a = rng.complex_normal();
  const double norm = std::sqrt(kernels::active().norm_squared(amps));
  kernels::active().scale(amps, 1.0 / norm);
  return StateVector(dim, num_qudits, std::move(amps));
}

double StateVector::norm_squared() const { return kernels::active().norm_squared(amps_); }

void StateVector::check_norm(const char* where) const {
  const double norm = norm_squared();
  if (!(std::abs(norm - 1.0) < kNormTolerance)) {
    throw std::domain_error(std::string(where) + ": state is not normalized (norm^2 = " +
                            std::to_string(norm) + ")");
  }
}

std::size_t StateVector::place_value(int position) const {
  std::size_t value = 1;
  for (int i = position + 1; i < num_qudits_; ++i) value *= static_cast<std::size_t>(dim_);
  return value;
}

int StateVector::digit(std::size_t label, int position) const {
  return static_cast<int>((label / place_value(position)) % static_cast<std::size_t>(dim_));
}

std::vector<std::size_t> StateVector::validated_targets(std::span<const int> targets) const {
  std::vector<std::size_t> weights;
  weights.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const int t = targets[i];
    if (t < 0 || t >= num_qudits_) {
      throw std::domain_error("target qudit " + std::to_string(t) + " out of range [0, " +
                              std::to_string(num_qudits_) + ")");
    }
    if (std::find(targets.begin(), targets.begin() + static_cast<std::ptrdiff_t>(i), t) !=
        targets.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw std::domain_error("duplicate target qudit " + std::to_string(t));
    }
    weights.push_back(place_value(t));
  }
  return weights;
}

void StateVector::apply(const GateMatrix& gate, std::span<const int> targets) {
  const std::vector<std::size_t> weights = validated_targets(targets);
  const std::size_t gate_dim = checked_power(dim_, static_cast<int>(targets.size()));
  if (gate.dim() != gate_dim) {
    throw std::domain_error("apply_gate: gate of dimension " + std::to_string(gate.dim()) +
                            " does not act on " + std::to_string(targets.size()) +
                            " qudits of dimension " + std::to_string(dim_));
  }
  const auto d = static_cast<std::size_t>(dim_);

  // offsets[c]: displacement of gate basis label c, first target most
  // significant.
  std::vector<std::size_t> offsets(gate_dim, 0);
  for (std::size_t c = 0; c < gate_dim; ++c) {
    std::size_t rest = c;
    for (std::size_t t = weights.size(); t-- > 0;) {
      offsets[c] += (rest % d) * weights[t];
      rest /= d;
    }
  }

  // bases: labels whose target digits are all zero.
  std::vector<std::size_t> bases;
  bases.reserve(amps_.size() / gate_dim);
  for (std::size_t label = 0; label < amps_.size(); ++label) {
    bool zero = true;
    for (const std::size_t w : weights) {
      if ((label / w) % d != 0) {
        zero = false;
        break;
      }
    }
    if (zero) bases.push_back(label);
  }

  const std::vector<Complex> matrix = gate.row_major();
  kernels::active().apply_dense(amps_, bases, offsets, matrix);
  check_norm("apply_gate");
}

StateVector StateVector::tensor(const StateVector& rhs) const {
  if (rhs.dim_ != dim_) throw std::domain_error("tensor: qudit dimensions differ");
  std::vector<Complex> amps(amps_.size() * rhs.amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.amps_.size(); ++j) {
      amps[i * rhs.amps_.size() + j] = amps_[i] * rhs.amps_[j];
    }
  }
  return StateVector(dim_, num_qudits_ + rhs.num_qudits_, std::move(amps));
}

StateVector StateVector::without_qudit(int position) const {
  if (position < 0 || position >= num_qudits_) {
    throw std::domain_error("without_qudit: position out of range");
  }
  const std::size_t weight = place_value(position);
  const auto d = static_cast<std::size_t>(dim_);

  std::vector<double> mass(d, 0.0);
  for (std::size_t label = 0; label < amps_.size(); ++label) {
    mass[(label / weight) % d] += std::norm(amps_[label]);
  }
  const std::size_t kept =
      static_cast<std::size_t>(std::max_element(mass.begin(), mass.end()) - mass.begin());
  for (std::size_t k = 0; k < d; ++k) {
    if (k != kept && mass[k] > kNormTolerance) {
      throw std::domain_error("without_qudit: qudit " + std::to_string(position) +
                              " is not in a computational basis product state");
    }
  }

  const std::size_t reduced_size = amps_.size() / d;
  std::vector<Complex> amps(reduced_size);
  for (std::size_t label = 0; label < reduced_size; ++label) {
    const std::size_t high = label / weight;
    const std::size_t low = label % weight;
    amps[label] = amps_[(high * d + kept) * weight + low];
  }
  kernels::active().scale(amps, 1.0 / std::sqrt(mass[kept]));
  return StateVector(dim_, num_qudits_ - 1, std::move(amps));
}

StateVector StateVector::reordered(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != num_qudits_) {
    throw std::domain_error("reordered: order must list every qudit once");
  }
  std::vector<bool> seen(order.size(), false);
  for (const int q : order) {
    if (q < 0 || q >= num_qudits_ || seen[static_cast<std::size_t>(q)]) {
      throw std::domain_error("reordered: order is not a permutation");
    }
    seen[static_cast<std::size_t>(q)] = true;
  }
  std::vector<std::size_t> old_weight(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) old_weight[i] = place_value(order[i]);

  const auto d = static_cast<std::size_t>(dim_);
  std::vector<Complex> amps(amps_.size());
  for (std::size_t label = 0; label < amps_.size(); ++label) {
    std::size_t rest = label;
    std::size_t old_label = 0;
    for (std::size_t i = order.size(); i-- > 0;) {
      old_label += (rest % d) * old_weight[i];
      rest /= d;
    }
    amps[label] = amps_[old_label];
  }
  return StateVector(dim_, num_qudits_, std::move(amps));
}

StateVector basis_state(int dim, int num_qudits, std::size_t label) {
  return StateVector::basis(dim, num_qudits, label);
}

StateVector apply_gate(StateVector state, const GateMatrix& gate, std::span<const int> targets) {
  state.apply(gate, targets);
  return state;
}

double max_deviation(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim() || a.num_qudits() != b.num_qudits()) {
    throw std::domain_error("max_deviation: state shapes differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool equal_states(const StateVector& a, const StateVector& b, Comparison mode, double tol) {
  if (a.dim() != b.dim() || a.num_qudits() != b.num_qudits()) {
    throw std::domain_error("equal_states: state shapes differ");
  }
  if (mode == Comparison::Exact) return max_deviation(a, b) <= tol;

  std::size_t pivot = 0;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (std::abs(b[i]) > std::abs(b[pivot])) pivot = i;
  }
  if (std::abs(a[pivot]) <= tol) return false;
  const Complex phase = std::polar(1.0, std::arg(a[pivot]) - std::arg(b[pivot]));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - phase * b[i]));
  return worst <= tol;
}

}  // namespace remoteop
