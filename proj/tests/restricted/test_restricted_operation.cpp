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
#include "remoteop/core/rng.hpp"
#include "remoteop/restricted/restricted_operation.hpp"
#include "support/oracle.hpp"

namespace remoteop {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

TEST(BuildMatrix, DiagonalPhases) {
  const double phases[] = {kPi / 2, -kPi / 2};
  const auto op = RestrictedOperation::from_phases(2, 1, Permutation::identity(2), phases);
  const Matrix m = build_matrix(op).entries();
  Matrix want = Matrix::Zero(2, 2);
  want(0, 0) = kI;
  want(1, 1) = -kI;
  EXPECT_LT(testing::max_abs_diff(m, want), 1e-15);
  EXPECT_LT(testing::max_abs_diff(build_matrix(u_diag(kPi / 2)).entries(), want), 1e-15);
}

TEST(BuildMatrix, AntiDiagonalAtZero) {
  const auto op = u_anti(0.0);
  Matrix want = Matrix::Zero(2, 2);
  want(0, 1) = 1.0;
  want(1, 0) = -1.0;
  EXPECT_LT(testing::max_abs_diff(build_matrix(op).entries(), want), 1e-15);
}

TEST(BuildMatrix, AntiDiagonalGeneralAngle) {
  for (double phi : {0.3, 1.1, -2.0}) {
    Matrix want = Matrix::Zero(2, 2);
    want(0, 1) = std::polar(1.0, phi);
    want(1, 0) = -std::polar(1.0, -phi);
    EXPECT_LT(testing::max_abs_diff(build_matrix(u_anti(phi)).entries(), want), 1e-15);
  }
}

TEST(BuildMatrix, TrivialOperationIsExactIdentity) {
  for (int d : {2, 3}) {
    for (int n = 1; n <= 2; ++n) {
      for (int m = 0; m <= 1; ++m) {
        const Matrix e = build_matrix(RestrictedOperation::identity(d, n, m)).entries();
        EXPECT_TRUE(e == Matrix::Identity(e.rows(), e.cols()));
      }
    }
  }
}

TEST(BuildMatrixProperty, UnitaryWithBlockColumnSupport) {
  for (int d : {2, 3}) {
    for (int n = 1; n <= 2; ++n) {
      for (int m = 0; m <= 1; ++m) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
          const auto op = random_restricted(seed, d, n, m);
          const Matrix e = build_matrix(op).entries();
          EXPECT_LT(unitarity_error(e), 1e-10);
          const auto block = static_cast<Eigen::Index>(op.block_dim());
          for (Eigen::Index col = 0; col < e.cols(); ++col) {
            const auto fx = static_cast<Eigen::Index>(op.permutation()(static_cast<std::size_t>(col / block)));
            for (Eigen::Index row = 0; row < e.rows(); ++row) {
              if (row < fx * block || row >= (fx + 1) * block) {
                ASSERT_EQ(e(row, col), Complex(0.0, 0.0));
              }
            }
          }
          // The dense matrix acts as the definition says.
          Rng rng(seed);
          const StateVector s = StateVector::random(rng, d, n + m);
          const auto via_matrix = testing::matvec(e, s.amplitudes());
          EXPECT_LT(testing::max_abs_diff(via_matrix, testing::restricted_apply(op, s.amplitudes())), 1e-12);
        }
      }
    }
  }
}

TEST(Classify, DiagonalRecoversPhases) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = kI;
  m(1, 1) = -kI;
  const auto op = classify(m, 2, 1, 0);
  ASSERT_TRUE(op.has_value());
  EXPECT_TRUE(op->permutation().is_identity());
  const auto phases = op->phases();
  EXPECT_NEAR(phases[0], kPi / 2, 1e-15);
  EXPECT_NEAR(phases[1], -kPi / 2, 1e-15);
}

TEST(Classify, RejectsHadamard) {
  EXPECT_FALSE(classify(hadamard(), 2, 1, 0).has_value());
}

TEST(Classify, RejectsNonUnitaryAndWrongSize) {
  EXPECT_THROW(classify(Matrix(Matrix::Identity(2, 2) * 2.0), 2, 1, 0), std::domain_error);
  EXPECT_THROW(classify(Matrix(Matrix::Identity(4, 4)), 2, 1, 0), std::domain_error);
}

TEST(Classify, SpecialGatesRoundTrip) {
  for (double phi : {0.0, kPi / 4, 1.3, -2.2}) {
    for (const auto& op : {u_diag(phi), u_anti(phi)}) {
      const auto back = classify(build_matrix(op), 2, 1, 0);
      ASSERT_TRUE(back.has_value());
      EXPECT_TRUE(same_operation(op, *back, 1e-12));
    }
  }
}

TEST(ClassifyProperty, RoundTripsRandomOperations) {
  for (int d : {2, 3}) {
    for (int n = 1; n <= 2; ++n) {
      for (int m = 0; m <= 1; ++m) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
          const auto op = random_restricted(1000 + seed, d, n, m);
          const auto back = classify(build_matrix(op), d, n, m);
          ASSERT_TRUE(back.has_value());
          EXPECT_EQ(back->permutation(), op.permutation());
          EXPECT_TRUE(same_operation(op, *back, 1e-12));
        }
      }
    }
  }
}

TEST(ClassifyProperty, RejectsHaarUnitaries) {
  Rng rng(55);
  for (int i = 0; i < 20; ++i) {
    const GateMatrix u = haar_unitary(rng, 4);
    EXPECT_FALSE(classify(u, 2, 1, 1).has_value());
    EXPECT_FALSE(classify(u, 2, 2, 0).has_value());
  }
}

TEST(Classify, IdentityTensorBlockIsRecognized) {
  // I (x) u is block-diagonal with u in every block.
  Rng rng(9);
  const GateMatrix u = haar_unitary(rng, 2);
  const Matrix kron = testing::expand(u.entries(), 2, 2, {1});
  const auto op = classify(kron, 2, 1, 1);
  ASSERT_TRUE(op.has_value());
  EXPECT_TRUE(op->permutation().is_identity());
  EXPECT_LT(testing::max_abs_diff(op->block(1).entries(), u.entries()), 1e-15);
}

TEST(RandomRestricted, SameSeedSameOperation) {
  const auto a = random_restricted(42, 3, 2, 1);
  const auto b = random_restricted(42, 3, 2, 1);
  EXPECT_TRUE(same_operation(a, b, 0.0));
  EXPECT_FALSE(same_operation(a, random_restricted(43, 3, 2, 1), 1e-6));
}

TEST(RandomRestricted, BlocksAreUnitary) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto op = random_restricted(seed, 2, 1, 2);
    for (const GateMatrix& g : op.blocks()) EXPECT_LT(unitarity_error(g.entries()), 1e-10);
  }
}

TEST(HaarUnitary, TraceSecondMoment) {
  Rng rng(2000);
  double sum = 0.0;
  constexpr int kDraws = 2000;
  for (int i = 0; i < kDraws; ++i) sum += std::norm(haar_unitary(rng, 2).entries().trace());
  EXPECT_NEAR(sum / kDraws, 1.0, 0.1);
}

TEST(HaarUnitary, PhaseCorrectionMakesDiagonalUnbiased) {
  // Without the R-diagonal correction, Q(0,0) has a biased phase. With it,
  // E[U(0,0)] vanishes.
  Rng rng(3);
  Complex mean(0.0, 0.0);
  constexpr int kDraws = 4000;
  for (int i = 0; i < kDraws; ++i) mean += haar_unitary(rng, 2)(0, 0);
  EXPECT_LT(std::abs(mean / double(kDraws)), 0.05);
}

TEST(ControlledU, OneControlXIsCnot) {
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  EXPECT_TRUE(build_matrix(controlled_u(1, pauli_x())).entries() == cnot);
}

TEST(ControlledU, TwoControlsXIsToffoli) {
  Matrix toffoli = Matrix::Identity(8, 8);
  toffoli(6, 6) = toffoli(7, 7) = 0.0;
  toffoli(6, 7) = toffoli(7, 6) = 1.0;
  EXPECT_TRUE(build_matrix(controlled_u(2, pauli_x())).entries() == toffoli);
}

TEST(ControlledU, ActsOnlyOnAllOnesControls) {
  Rng rng(21);
  const GateMatrix u = haar_unitary(rng, 2);
  const Matrix full = build_matrix(controlled_u(2, u)).entries();
  const StateVector psi = StateVector::random(rng, 2, 1);
  for (std::size_t j = 0; j < 4; ++j) {
    const StateVector in = basis_state(2, 2, j).tensor(psi);
    const auto out = testing::matvec(full, in.amplitudes());
    std::vector<Complex> want(8, Complex(0.0, 0.0));
    for (std::size_t t = 0; t < 2; ++t) {
      Complex v = psi[t];
      if (j == 3) v = u(t, 0) * psi[0] + u(t, 1) * psi[1];
      want[j * 2 + t] = v;
    }
    EXPECT_LT(testing::max_abs_diff(out, want), 1e-15) << "controls " << j;
  }
}

TEST(RestrictedOperation, RejectsInconsistentShapes) {
  EXPECT_THROW(RestrictedOperation(2, 1, 0, Permutation::identity(3),
                                   std::vector<GateMatrix>(3, GateMatrix::identity(1))),
               std::domain_error);
  EXPECT_THROW(RestrictedOperation(2, 1, 1, Permutation::identity(2),
                                   std::vector<GateMatrix>(2, GateMatrix::identity(3))),
               std::domain_error);
  EXPECT_THROW(RestrictedOperation(2, 0, 0, Permutation::identity(1),
                                   std::vector<GateMatrix>(1, GateMatrix::identity(1))),
               std::domain_error);
  EXPECT_THROW(controlled_u(0, pauli_x()), std::domain_error);
}

}  // namespace
}  // namespace remoteop
