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

#include <numbers>

#include "remoteop/core/gates.hpp"
#include "remoteop/core/state_vector.hpp"
#include "support/oracle.hpp"

namespace remoteop {
namespace {

TEST(GeneralizedCnot, QubitOneOneGoesToOneZero) {
  const StateVector out = apply_gate(basis_state(2, 2, 3), generalized_cnot(2), {0, 1});
  EXPECT_EQ(out[2], Complex(1.0, 0.0));
}

TEST(GeneralizedCnot, QutritZeroTargetCopiesControl) {
  const StateVector out = apply_gate(basis_state(3, 2, 2 * 3 + 0), generalized_cnot(3), {0, 1});
  EXPECT_EQ(out[2 * 3 + 2], Complex(1.0, 0.0));
}

TEST(GeneralizedCnot, QubitTwiceRestoresZeroTarget) {
  for (std::size_t x = 0; x < 2; ++x) {
    StateVector s = basis_state(2, 2, x * 2);
    s = apply_gate(s, generalized_cnot(2), {0, 1});
    s = apply_gate(s, generalized_cnot(2), {0, 1});
    EXPECT_EQ(s[x * 2], Complex(1.0, 0.0));
  }
}

TEST(GeneralizedCnot, MapsEveryBasisPairByDefinition) {
  for (int d = 2; d <= 7; ++d) {
    const GateMatrix g = generalized_cnot(d);
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        const auto col = static_cast<std::size_t>(x * d + y);
        const auto row = static_cast<std::size_t>(x * d + ((x - y) % d + d) % d);
        EXPECT_EQ(g(row, col), Complex(1.0, 0.0));
      }
    }
  }
}

TEST(GeneralizedCnotProperty, IsZeroOnePermutationMatrix) {
  for (int d = 2; d <= 9; ++d) {
    const GateMatrix cnot = generalized_cnot(d);
    const Matrix& m = cnot.entries();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      int ones = 0;
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const Complex v = m(r, c);
        ASSERT_TRUE(v == Complex(0.0, 0.0) || v == Complex(1.0, 0.0));
        ones += v == Complex(1.0, 0.0);
      }
      EXPECT_EQ(ones, 1);
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      EXPECT_EQ(m.col(c).cwiseAbs().sum(), 1.0);
    }
  }
}

TEST(Qft, QubitIsHadamard) {
  const double h = 1.0 / std::sqrt(2.0);
  const GateMatrix q = qft(2);
  EXPECT_NEAR(std::abs(q(0, 0) - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q(0, 1) - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q(1, 0) - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q(1, 1) + h), 0.0, 1e-15);
  EXPECT_EQ(testing::max_abs_diff(hadamard().entries(), q.entries()), 0.0);
}

TEST(Qft, QutritOnZeroIsUniform) {
  const StateVector out = apply_gate(basis_state(3, 1, 0), qft(3), {0});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(out[i] - 1.0 / std::sqrt(3.0)), 0.0, 1e-15);
}

TEST(Qft, EntriesFollowDefinitionAndAreUnitary) {
  for (int d = 2; d <= 8; ++d) {
    const GateMatrix q = qft(d);
    for (int y = 0; y < d; ++y) {
      for (int x = 0; x < d; ++x) {
        const Complex want = std::polar(1.0 / std::sqrt(d), 2 * std::numbers::pi * x * y / d);
        EXPECT_LT(std::abs(q(static_cast<std::size_t>(y), static_cast<std::size_t>(x)) - want), 1e-14);
      }
    }
    EXPECT_LT(unitarity_error(q.entries()), 1e-12);
  }
}

TEST(SGate, QubitIsPauliZExactly) {
  const GateMatrix s = s_gate(2);
  EXPECT_EQ(s(0, 0), Complex(1.0, 0.0));
  EXPECT_EQ(s(1, 1), Complex(-1.0, 0.0));
  EXPECT_EQ(s(0, 1), Complex(0.0, 0.0));
  EXPECT_EQ(s(1, 0), Complex(0.0, 0.0));
  EXPECT_EQ(testing::max_abs_diff(pauli_z().entries(), s.entries()), 0.0);
}

TEST(SGate, QutritDiagonal) {
  const GateMatrix s = s_gate(3);
  EXPECT_LT(std::abs(s(1, 1) - std::polar(1.0, -2 * std::numbers::pi / 3)), 1e-15);
  EXPECT_LT(std::abs(s(2, 2) - std::polar(1.0, -4 * std::numbers::pi / 3)), 1e-15);
}

TEST(SGateProperty, DthPowerIsIdentity) {
  for (int d = 2; d <= 12; ++d) {
    const GateMatrix p = s_gate(d).power(static_cast<unsigned>(d));
    EXPECT_LT(testing::max_abs_diff(p.entries(), Matrix::Identity(d, d)), 1e-12) << "d=" << d;
  }
}

TEST(GateMatrix, RejectsNonUnitary) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = 0.1;
  EXPECT_THROW(GateMatrix{m}, std::domain_error);
  EXPECT_THROW(GateMatrix{Matrix::Identity(2, 3)}, std::domain_error);
}

TEST(Gates, InvalidDimension) {
  EXPECT_THROW(qft(1), std::domain_error);
  EXPECT_THROW(s_gate(0), std::domain_error);
  EXPECT_THROW(generalized_cnot(1), std::domain_error);
}

}  // namespace
}  // namespace remoteop
