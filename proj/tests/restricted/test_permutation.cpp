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

#include <gtest/gtest.h>

#include <map>

#include "remoteop/core/rng.hpp"
#include "remoteop/restricted/permutation.hpp"

namespace remoteop {
namespace {

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0}), std::domain_error);
  EXPECT_THROW(Permutation({0, 2}), std::domain_error);
  EXPECT_THROW(Permutation(std::vector<std::size_t>{}), std::domain_error);
}

TEST(Permutation, InverseComposesToIdentity) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Permutation f = Permutation::random(rng, 1 + rng.below(30));
    const Permutation g = f.inverse();
    for (std::size_t x = 0; x < f.size(); ++x) EXPECT_EQ(g(f(x)), x);
  }
  EXPECT_TRUE(Permutation::identity(5).is_identity());
  EXPECT_FALSE(Permutation({1, 0}).is_identity());
}

TEST(Permutation, RandomIsUniformOnThreeElements) {
  Rng rng(2);
  std::map<std::vector<std::size_t>, int> counts;
  constexpr int kDraws = 60000;
  for (int i = 0; i < kDraws; ++i) ++counts[Permutation::random(rng, 3).map()];
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [map, c] : counts) EXPECT_NEAR(c / double(kDraws), 1.0 / 6.0, 0.01);
}

TEST(Permutation, GateIsSumOfKetBras) {
  const Permutation f({2, 0, 1});
  const GateMatrix v = permutation_gate(f);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(v(r, c), Complex(r == f(c) ? 1.0 : 0.0, 0.0));
    }
  }
}

}  // namespace
}  // namespace remoteop
