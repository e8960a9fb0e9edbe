// Copyright 2026 The TeleportLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "teleportlab/linalg.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "teleportlab/circuit.h"
#include "test_util.h"

namespace teleportlab {
namespace {

using testing::random_density;
using testing::random_ket;
using testing::random_unitary;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Vector bell_plus() { return (ket("00") + ket("11")) * kInvSqrt2; }

TEST(KronTest, IdentityTimesIdentity) {
  EXPECT_EQ(kron(Matrix(Matrix::Identity(2, 2)), Matrix(Matrix::Identity(2, 2))),
            Matrix(Matrix::Identity(4, 4)));
}

TEST(KronTest, BasisProjectors) {
  const Matrix p = kron(projector(ket("0")), projector(ket("1")));
  EXPECT_EQ(p, projector(ket("01")));
}

TEST(KronTest, XXFixesBellState) {
  const Matrix xx = kron(pauli_x(), pauli_x());
  // XX|00> = |11>, XX|11> = |00>.
  EXPECT_LT((xx * bell_plus() - bell_plus()).norm(), kAlgebraicTol);
}

TEST(KronTest, VectorOrderIsBigEndian) {
  EXPECT_EQ(kron(ket("1"), ket("0")), ket("10"));
  EXPECT_EQ(ket("10"), basis_state(2, 2));
}

TEST(QubitCountTest, RejectsNonPowersOfTwo) {
  EXPECT_EQ(qubit_count(8), 3);
  EXPECT_EQ(qubit_count(1), 0);
  EXPECT_THROW(qubit_count(6), std::invalid_argument);
  EXPECT_THROW(qubit_count(0), std::invalid_argument);
}

TEST(EmbedTest, SingleQubitIsTheGate) {
  const std::array t{0};
  EXPECT_EQ(embed(hadamard(), t, 1), hadamard());
}

TEST(EmbedTest, XOnSecondQubit) {
  const std::array t{1};
  EXPECT_EQ(embed(pauli_x(), t, 2) * ket("00"), ket("01"));
}

TEST(EmbedTest, NonAdjacentCnotPermutesBasis) {
  const std::array t{0, 2};
  const Matrix u = embed(Gate::cnot(0, 1).matrix(), t, 3);
  // Oracle: flip bit 2 whenever bit 0 is set.
  for (int in = 0; in < 8; ++in) {
    const int out = (in & 0b100) ? in ^ 0b001 : in;
    EXPECT_EQ(u * basis_state(3, in), basis_state(3, out)) << "input " << in;
  }
  EXPECT_EQ(u * ket("101"), ket("100"));
}

TEST(EmbedTest, RejectsBadTargets) {
  const std::array dup{1, 1};
  const std::array out_of_range{0, 3};
  const Matrix cnot = Gate::cnot(0, 1).matrix();
  EXPECT_THROW(embed(cnot, dup, 3), std::invalid_argument);
  EXPECT_THROW(embed(cnot, out_of_range, 3), std::invalid_argument);
}

// apply_gate must agree with the explicit operator for random gates, targets
// and states.
TEST(ApplyGateProperty, MatchesEmbeddedOperator) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<int> qubits(n);
    for (int i = 0; i < n; ++i) qubits[i] = i;
    std::shuffle(qubits.begin(), qubits.end(), rng);
    const int arity = 1 + trial % 2;
    const std::vector<int> targets(qubits.begin(), qubits.begin() + arity);
    const Matrix g = random_unitary(rng, Eigen::Index{1} << arity);
    const Matrix full = embed(g, targets, n);

    Vector v = random_ket(rng, Eigen::Index{1} << n);
    const Vector expected = full * v;
    apply_gate(v, g, targets);
    EXPECT_LT((v - expected).norm(), kAlgebraicTol);

    Matrix rho = random_density(rng, Eigen::Index{1} << n);
    const Matrix expected_rho = full * rho * full.adjoint();
    apply_gate(rho, g, targets);
    EXPECT_LT(max_abs_diff(rho, expected_rho), kAlgebraicTol);
  }
}

TEST(ApplyGateProperty, PreservesNormAndTrace) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::array t{trial % 3, (trial + 1) % 3};
    const Matrix g = random_unitary(rng, 4);
    Vector v = random_ket(rng, 8);
    apply_gate(v, g, t);
    EXPECT_NEAR(v.norm(), 1.0, kAlgebraicTol);
    Matrix rho = random_density(rng, 8);
    apply_gate(rho, g, t);
    EXPECT_NEAR(rho.trace().real(), 1.0, kAlgebraicTol);
  }
}

TEST(PartialTraceTest, ProductBasisState) {
  const std::array keep{0};
  EXPECT_EQ(partial_trace(projector(ket("00")), keep), projector(ket("0")));
}

TEST(PartialTraceTest, BellStateIsMaximallyMixed) {
  const std::array keep{0};
  // Hand sum of the two diagonal 2x2 blocks of |psi+><psi+|.
  Matrix expected = Matrix::Identity(2, 2) * 0.5;
  EXPECT_LT(max_abs_diff(partial_trace(projector(bell_plus()), keep), expected),
            kAlgebraicTol);
}

TEST(PartialTraceProperty, RecoversTensorFactor) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_density(rng, 2);
    const Matrix b = random_density(rng, 4);
    const std::array keep_a{0};
    const std::array keep_b{1, 2};
    const Matrix ab = kron(a, b);
    EXPECT_LT(max_abs_diff(partial_trace(ab, keep_a), a), kAlgebraicTol);
    EXPECT_LT(max_abs_diff(partial_trace(ab, keep_b), b), kAlgebraicTol);
  }
}

TEST(PartialTraceTest, KeepOrderPermutesOutput) {
  const std::array keep{1, 0};
  EXPECT_EQ(partial_trace(projector(ket("01")), keep), projector(ket("10")));
}

TEST(ReducePureProperty, AgreesWithPartialTrace) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    // Unnormalized on purpose.
    const Vector v = random_ket(rng, 16) * (0.3 + 0.1 * trial);
    const std::vector<int> keep = {trial % 4, (trial + 2) % 4};
    EXPECT_LT(max_abs_diff(reduce_pure(v, keep), partial_trace(projector(v), keep)),
              kAlgebraicTol);
  }
}

TEST(FidelityPureTest, Basics) {
  std::mt19937_64 rng(15);
  const Vector psi = random_ket(rng, 2);
  EXPECT_NEAR(fidelity_pure(psi, projector(psi)), 1.0, kAlgebraicTol);
  EXPECT_NEAR(fidelity_pure(ket("0"), projector(ket("1"))), 0.0, kAlgebraicTol);
}

TEST(FidelityPureTest, BitFlipCoefficientAtHalf) {
  const double eta = 0.5;
  const Vector plus = (ket("0") + ket("1")) * kInvSqrt2;
  const Matrix rho = ((1 - eta) * (1 - eta) + eta * eta) * projector(plus);
  EXPECT_NEAR(fidelity_pure(plus, rho), 0.5, kAlgebraicTol);
}

TEST(ValidateDensityTest, MaximallyMixedPasses) {
  const auto d = validate_density(Matrix::Identity(2, 2) * 0.5, false);
  EXPECT_TRUE(d.passed);
  EXPECT_NEAR(d.trace, 1.0, kAlgebraicTol);
}

TEST(ValidateDensityTest, SubnormalizedBitFlipBell) {
  const double eta = 0.3;
  const Matrix rho = ((1 - eta) * (1 - eta) + eta * eta) * projector(bell_plus());
  const auto d = validate_density(rho, true);
  EXPECT_TRUE(d.passed);
  EXPECT_NEAR(d.trace, 0.58, kAlgebraicTol);
  EXPECT_FALSE(validate_density(rho, false).passed);
}

TEST(ValidateDensityTest, NonHermitianFails) {
  Matrix rho = Matrix::Identity(2, 2) * 0.5;
  rho(0, 1) = 0.1;
  const auto d = validate_density(rho, false);
  EXPECT_FALSE(d.passed);
  EXPECT_NEAR(d.hermiticity_residual, 0.1, kAlgebraicTol);
}

TEST(ValidateDensityTest, NegativeEigenvalueFails) {
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 1.2;
  rho(1, 1) = -0.2;
  const auto d = validate_density(rho, false);
  EXPECT_FALSE(d.passed);
  EXPECT_NEAR(d.min_eigenvalue, -0.2, kAlgebraicTol);
}

TEST(PhaseTest, EqualUpToPhase) {
  std::mt19937_64 rng(16);
  const Matrix u = random_unitary(rng, 4);
  EXPECT_TRUE(equal_up_to_phase(u, Matrix(u * std::polar(1.0, 0.7)), kAlgebraicTol));
  EXPECT_FALSE(equal_up_to_phase(u, Matrix(u * 2.0), kAlgebraicTol));
  EXPECT_FALSE(equal_up_to_phase(ket("0"), ket("1"), kAlgebraicTol));
  EXPECT_LT(unitarity_residual(u), kAlgebraicTol);
  EXPECT_THROW(max_abs_diff(u, Matrix::Identity(2, 2)), std::invalid_argument);
}

}  // namespace
}  // namespace teleportlab
