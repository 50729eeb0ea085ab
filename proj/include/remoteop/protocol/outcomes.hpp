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
#include <span>
#include <variant>
#include <vector>

#include "remoteop/core/measurement.hpp"
#include "remoteop/core/rng.hpp"

namespace remoteop {

// Chooses the outcome of each measurement a protocol performs, in order.
class OutcomeChooser {
 public:
  virtual ~OutcomeChooser() = default;
  virtual std::size_t choose(std::span<const double> probabilities) = 0;
};

class SampledChooser final : public OutcomeChooser {
 public:
  explicit SampledChooser(std::uint64_t seed) : rng_(seed) {}
  std::size_t choose(std::span<const double> probabilities) override;

 private:
  Rng rng_;
};

// Replays a fixed list of outcomes; throws std::domain_error when a run
// measures more often than the list covers.
class ForcedChooser final : public OutcomeChooser {
 public:
  explicit ForcedChooser(std::vector<std::size_t> outcomes) : outcomes_(std::move(outcomes)) {}
  std::size_t choose(std::span<const double> probabilities) override;

 private:
  std::vector<std::size_t> outcomes_;
  std::size_t next_ = 0;
};

// Follows a prefix, then takes the first possible outcome at every later
// measurement and remembers the others so the caller can revisit them.
class EnumeratingChooser final : public OutcomeChooser {
 public:
  explicit EnumeratingChooser(std::vector<std::size_t> prefix) : prefix_(std::move(prefix)) {}
  std::size_t choose(std::span<const double> probabilities) override;

  const std::vector<std::size_t>& path() const { return path_; }
  // Unvisited possible outcomes at each depth past the prefix.
  const std::vector<std::vector<std::size_t>>& alternatives() const { return alternatives_; }
  std::size_t prefix_size() const { return prefix_.size(); }

 private:
  std::vector<std::size_t> prefix_;
  std::vector<std::size_t> path_;
  std::vector<std::vector<std::size_t>> alternatives_;
};

// Protocol-level outcome policy. Forced lists one outcome per measurement
// the protocol performs.
struct ForcedOutcomes {
  std::vector<std::size_t> values;
  ForcedOutcomes(std::vector<std::size_t> v) : values(std::move(v)) {}
  ForcedOutcomes(Forced f) : values{f.value} {}
};

using OutcomePolicy = std::variant<Sample, ForcedOutcomes, EnumerateAll>;

// Runs `run(chooser)` once per branch selected by the policy. With
// EnumerateAll the branches come back in lexicographic order of their
// outcome sequences.
template <class Run>
auto for_each_branch(const OutcomePolicy& policy, Run&& run) {
  using Result = decltype(run(std::declval<OutcomeChooser&>()));
  std::vector<Result> results;
  if (const auto* sample = std::get_if<Sample>(&policy)) {
    SampledChooser chooser(sample->seed);
    results.push_back(run(chooser));
    return results;
  }
  if (const auto* forced = std::get_if<ForcedOutcomes>(&policy)) {
    ForcedChooser chooser(forced->values);
    results.push_back(run(chooser));
    return results;
  }
  std::vector<std::vector<std::size_t>> pending{{}};
  while (!pending.empty()) {
    EnumeratingChooser chooser(std::move(pending.back()));
    pending.pop_back();
    results.push_back(run(chooser));
    const auto& path = chooser.path();
    const auto& alts = chooser.alternatives();
    // Shallow siblings go on the stack first so the deepest, smallest
    // alternative is explored next.
    for (std::size_t i = 0; i < alts.size(); ++i) {
      const std::size_t depth = chooser.prefix_size() + i;
      for (auto it = alts[i].rbegin(); it != alts[i].rend(); ++it) {
        std::vector<std::size_t> next(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(depth));
        next.push_back(*it);
        pending.push_back(std::move(next));
      }
    }
  }
  return results;
}

}  // namespace remoteop
