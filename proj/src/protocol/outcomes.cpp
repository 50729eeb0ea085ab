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

#include "remoteop/protocol/outcomes.hpp"

#include <stdexcept>

namespace remoteop {

std::size_t SampledChooser::choose(std::span<const double> probabilities) {
  return pick_outcome(probabilities, rng_.uniform());
}

std::size_t ForcedChooser::choose(std::span<const double> /*probabilities*/) {
  if (next_ >= outcomes_.size()) {
    throw std::domain_error("forced outcomes exhausted after " + std::to_string(next_) +
                            " measurements");
  }
  return outcomes_[next_++];
}

std::size_t EnumeratingChooser::choose(std::span<const double> probabilities) {
  const std::size_t depth = path_.size();
  if (depth < prefix_.size()) {
    path_.push_back(prefix_[depth]);
    return prefix_[depth];
  }
  std::vector<std::size_t> possible;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (probabilities[k] > kZeroBranchThreshold) possible.push_back(k);
  }
  if (possible.empty()) throw std::domain_error("measurement has no possible outcome");
  path_.push_back(possible.front());
  alternatives_.emplace_back(possible.begin() + 1, possible.end());
  return possible.front();
}

}  // namespace remoteop
