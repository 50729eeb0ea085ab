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

#include "remoteop/restricted/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "remoteop/core/rng.hpp"

namespace remoteop {

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  if (map_.empty()) throw std::domain_error("Permutation: empty map");
  std::vector<bool> hit(map_.size(), false);
  for (const std::size_t y : map_) {
    if (y >= map_.size() || hit[y]) {
      throw std::domain_error("Permutation: map is not a bijection on [0, " +
                              std::to_string(map_.size()) + ")");
    }
    hit[y] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> map(size);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return Permutation(std::move(map));
}

Permutation Permutation::random(Rng& rng, std::size_t size) {
  std::vector<std::size_t> map(size);
  std::iota(map.begin(), map.end(), std::size_t{0});
  for (std::size_t i = size; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(map[i - 1], map[j]);
  }
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) inv[map_[x]] = x;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < map_.size(); ++x) {
    if (map_[x] != x) return false;
  }
  return true;
}

GateMatrix permutation_gate(const Permutation& f) {
  const auto n = static_cast<Eigen::Index>(f.size());
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t x = 0; x < f.size(); ++x) {
    m(static_cast<Eigen::Index>(f(x)), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return GateMatrix(std::move(m));
}

}  // namespace remoteop
