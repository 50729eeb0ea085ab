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
#include <vector>

#include "remoteop/core/gate_matrix.hpp"

namespace remoteop {

class Rng;

/// A bijection f on {0, ..., size-1}, stored as map[x] = f(x).
class Permutation {
 public:
  // Throws std::domain_error unless map is a bijection.
  explicit Permutation(std::vector<std::size_t> map);

  static Permutation identity(std::size_t size);

  // Uniform draw by Fisher-Yates.
  static Permutation random(Rng& rng, std::size_t size);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t x) const { return map_[x]; }
  const std::vector<std::size_t>& map() const { return map_; }

  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> map_;
};

// sum_x |f(x)><x|, the permutation matrix of f.
GateMatrix permutation_gate(const Permutation& f);

}  // namespace remoteop
