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

#ifndef TELEPORTLAB_CIRCUIT_H_
#define TELEPORTLAB_CIRCUIT_H_

#include <string>
#include <string_view>
#include <vector>

#include "teleportlab/linalg.h"

namespace teleportlab {

enum class GateKind { H, X, Y, Z, CNOT, CZ, SWAP, ControlledU };

std::string_view gate_name(GateKind kind);
int gate_arity(GateKind kind);

// Fixed-size 2x2 matrices for the one-qubit kinds.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();

struct Gate {
  GateKind kind;
  // Control first for two-qubit kinds.
  std::vector<int> targets;
  // Payload for ControlledU only.
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();

  static Gate h(int q) { return {GateKind::H, {q}}; }
  static Gate x(int q) { return {GateKind::X, {q}}; }
  static Gate y(int q) { return {GateKind::Y, {q}}; }
  static Gate z(int q) { return {GateKind::Z, {q}}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, {c, t}}; }
  static Gate cz(int c, int t) { return {GateKind::CZ, {c, t}}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}}; }
  static Gate controlled(int c, int t, const Eigen::Matrix2cd& u) {
    return {GateKind::ControlledU, {c, t}, u};
  }

  // Local unitary on `targets` (2x2 or 4x4).
  Matrix matrix() const;

  friend bool operator==(const Gate& a, const Gate& b);
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  // Qubits read out in the computational basis after the gates. Carry no cost.
  std::vector<int> measured;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}
  Circuit(int n, std::vector<Gate> g) : n_qubits(n), gates(std::move(g)) {}

  Circuit& add(Gate g);
  Circuit& append(const Circuit& other);
  // Throws std::invalid_argument if a gate is malformed or out of range.
  void validate() const;
};

// Primitive decomposition: one-qubit gates and CNOT pass through.
std::vector<Gate> lower(const Gate& gate);
Circuit lower(const Circuit& c);

int quantum_cost(const Circuit& c);

Vector simulate(const Circuit& c, const Vector& input);
void simulate_in_place(const Circuit& c, Vector& state);
void simulate_in_place(const Circuit& c, Matrix& rho);

Matrix unitary_of(const Circuit& c);

// Line-oriented text form: "KIND q0 [q1]" or "MEASURE q"; '#' starts a comment.
// The qubit count is one past the largest index unless a "QUBITS n" line is given.
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit& c);

}  // namespace teleportlab

#endif  // TELEPORTLAB_CIRCUIT_H_
