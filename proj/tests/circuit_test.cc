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

#include "teleportlab/circuit.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"

namespace teleportlab {
namespace {

Circuit bell_prep() { return Circuit(2, {Gate::h(0), Gate::cnot(0, 1)}); }

TEST(LowerTest, SwapIsThreeCnots) {
  const auto g = lower(Gate::swap(0, 1));
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], Gate::cnot(0, 1));
  EXPECT_EQ(g[1], Gate::cnot(1, 0));
  EXPECT_EQ(g[2], Gate::cnot(0, 1));
}

TEST(LowerTest, CzIsHadamardConjugatedCnot) {
  const auto g = lower(Gate::cz(0, 1));
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], Gate::h(1));
  EXPECT_EQ(g[1], Gate::cnot(0, 1));
  EXPECT_EQ(g[2], Gate::h(1));
}

TEST(LowerTest, PrimitivesPassThrough) {
  for (const Gate& g : {Gate::h(0), Gate::x(0), Gate::y(0), Gate::z(0), Gate::cnot(1, 0)}) {
    const auto l = lower(g);
    ASSERT_EQ(l.size(), 1u);
    EXPECT_EQ(l[0], g);
  }
}

TEST(LowerTest, ControlledPauliPayloads) {
  EXPECT_EQ(lower(Gate::controlled(0, 1, pauli_x())).size(), 1u);
  EXPECT_EQ(lower(Gate::controlled(0, 1, pauli_z())).size(), 3u);
  EXPECT_THROW(lower(Gate::controlled(0, 1, pauli_y())), std::invalid_argument);
}

// Lowering must implement the same unitary, up to a global phase, for every
// placement on a three-qubit register.
TEST(LowerProperty, UnitaryEquivalentUpToPhase) {
  std::vector<Gate> gates;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      gates.push_back(Gate::swap(a, b));
      gates.push_back(Gate::cz(a, b));
      gates.push_back(Gate::cnot(a, b));
      gates.push_back(Gate::controlled(a, b, pauli_x()));
      gates.push_back(Gate::controlled(a, b, pauli_z()));
    }
  }
  for (const Gate& g : gates) {
    const Matrix original = unitary_of(Circuit(3, {g}));
    const Matrix lowered = unitary_of(Circuit(3, lower(g)));
    EXPECT_TRUE(equal_up_to_phase(original, lowered, kAlgebraicTol)) << gate_name(g.kind);
  }
}

TEST(QuantumCostTest, Examples) {
  EXPECT_EQ(quantum_cost(Circuit(1)), 0);
  EXPECT_EQ(quantum_cost(Circuit(2, {Gate::h(0), Gate::cnot(0, 1), Gate::cz(0, 1)})), 5);
  for (int k = 0; k < 6; ++k) {
    Circuit c(2);
    for (int i = 0; i < k; ++i) c.add(Gate::swap(0, 1));
    EXPECT_EQ(quantum_cost(c), 3 * k);
  }
}

TEST(QuantumCostProperty, EveryGateCostsAtLeastOne) {
  for (const Gate& g : {Gate::h(0), Gate::x(1), Gate::y(0), Gate::z(1), Gate::cnot(0, 1),
                        Gate::cz(1, 0), Gate::swap(0, 1)}) {
    EXPECT_GE(quantum_cost(Circuit(2, {g})), 1);
  }
}

TEST(QuantumCostTest, MeasurementsAreFree) {
  Circuit c = bell_prep();
  c.measured = {0, 1};
  EXPECT_EQ(quantum_cost(c), 2);
  EXPECT_EQ(quantum_cost(lower(c)), 2);
  EXPECT_EQ(lower(c).measured, c.measured);
}

TEST(SimulateTest, Hadamard) {
  const Vector out = simulate(Circuit(1, {Gate::h(0)}), ket("0"));
  EXPECT_LT((out - (ket("0") + ket("1")) / std::sqrt(2.0)).norm(), kAlgebraicTol);
}

TEST(SimulateTest, BellPreparation) {
  const Vector out = simulate(bell_prep(), ket("00"));
  EXPECT_LT((out - (ket("00") + ket("11")) / std::sqrt(2.0)).norm(), kAlgebraicTol);
}

TEST(SimulateTest, LoweredSwapOnAllBasisStates) {
  const Circuit c = lower(Circuit(2, {Gate::swap(0, 1)}));
  const Matrix swap = Gate::swap(0, 1).matrix();
  for (int i = 0; i < 4; ++i) {
    EXPECT_LT((simulate(c, basis_state(2, i)) - swap * basis_state(2, i)).norm(), kAlgebraicTol);
  }
  EXPECT_LT((simulate(c, ket("01")) - ket("10")).norm(), kAlgebraicTol);
}

TEST(SimulateTest, DensityPathMatchesVectorPath) {
  std::mt19937_64 rng(21);
  const Circuit c(3, {Gate::h(0), Gate::cnot(0, 2), Gate::cz(2, 1), Gate::swap(1, 0)});
  const Vector v = testing::random_ket(rng, 8);
  Matrix rho = projector(v);
  simulate_in_place(c, rho);
  EXPECT_LT(max_abs_diff(rho, projector(simulate(c, v))), kAlgebraicTol);
}

TEST(SimulateTest, RejectsWrongDimension) {
  EXPECT_THROW(simulate(bell_prep(), ket("0")), std::invalid_argument);
}

TEST(UnitaryOfTest, Basics) {
  EXPECT_EQ(unitary_of(Circuit(2)), Matrix(Matrix::Identity(4, 4)));
  EXPECT_EQ(unitary_of(Circuit(1, {Gate::x(0)})), pauli_x());
  const Vector a = unitary_of(bell_prep()) * ket("00");
  EXPECT_LT((a - simulate(bell_prep(), ket("00"))).norm(), kAlgebraicTol);
}

TEST(UnitaryOfProperty, RandomCircuitsAreUnitary) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> q(0, 3);
  std::uniform_int_distribution<int> kind(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(4);
    for (int i = 0; i < 12; ++i) {
      const int a = q(rng);
      int b = q(rng);
      if (b == a) b = (a + 1) % 4;
      switch (kind(rng)) {
        case 0: c.add(Gate::h(a)); break;
        case 1: c.add(Gate::x(a)); break;
        case 2: c.add(Gate::y(a)); break;
        case 3: c.add(Gate::z(a)); break;
        case 4: c.add(Gate::cnot(a, b)); break;
        case 5: c.add(Gate::cz(a, b)); break;
        default: c.add(Gate::swap(a, b)); break;
      }
    }
    const Matrix u = unitary_of(c);
    EXPECT_LT(unitarity_residual(u), kAlgebraicTol);
    EXPECT_TRUE(equal_up_to_phase(u, unitary_of(lower(c)), kAlgebraicTol));
  }
}

TEST(ValidateTest, RejectsMalformedGates) {
  EXPECT_THROW(Circuit(2, {Gate::cnot(0, 0)}).validate(), std::invalid_argument);
  EXPECT_THROW(Circuit(2, {Gate::h(2)}).validate(), std::invalid_argument);
  EXPECT_THROW(Circuit(2, {Gate{GateKind::H, {0, 1}}}).validate(), std::invalid_argument);
  Circuit m(2);
  m.measured = {5};
  EXPECT_THROW(m.validate(), std::invalid_argument);
}

TEST(CircuitTextTest, RoundTrip) {
  Circuit c(3, {Gate::h(0), Gate::cnot(0, 1), Gate::cz(1, 2), Gate::swap(0, 2), Gate::y(1)});
  c.measured = {0, 1};
  const Circuit back = parse_circuit(format_circuit(c));
  EXPECT_EQ(back.n_qubits, 3);
  EXPECT_EQ(back.gates, c.gates);
  EXPECT_EQ(back.measured, c.measured);
}

TEST(CircuitTextTest, CommentsAliasesAndWidth) {
  const Circuit c = parse_circuit("# bell\nh 0\ncx 0 1   # entangle\n\n");
  EXPECT_EQ(c.n_qubits, 2);
  EXPECT_EQ(c.gates, bell_prep().gates);
  EXPECT_EQ(parse_circuit("QUBITS 5\nH 0\n").n_qubits, 5);
}

TEST(CircuitTextTest, Errors) {
  EXPECT_THROW(parse_circuit("FOO 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_circuit("CNOT 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_circuit("H -1\n"), std::invalid_argument);
  EXPECT_THROW(parse_circuit("H x\n"), std::invalid_argument);
  EXPECT_THROW(parse_circuit("QUBITS 1\nCNOT 0 1\n"), std::invalid_argument);
  EXPECT_THROW(format_circuit(Circuit(2, {Gate::controlled(0, 1, pauli_x())})),
               std::invalid_argument);
}

}  // namespace
}  // namespace teleportlab
