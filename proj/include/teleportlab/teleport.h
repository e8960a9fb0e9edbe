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

#ifndef TELEPORTLAB_TELEPORT_H_
#define TELEPORTLAB_TELEPORT_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "teleportlab/channels.h"
#include "teleportlab/circuit.h"
#include "teleportlab/linalg.h"

namespace teleportlab {

// Bob's correction. ZX is Z * X as a matrix: X acts first.
enum class Pauli { I, X, Z, ZX };

std::string_view pauli_name(Pauli p);
Pauli parse_pauli(std::string_view name);
Matrix pauli_matrix(Pauli p);

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct MessageState {
  double theta = 0.0;
  double phi = 0.0;

  Vector vector() const;
};

// Keyed by outcome bit-string: Alice's two bits, then the remaining measured
// qubits in ascending order.
using CorrectionTable = std::map<std::string, Pauli>;

// bit = constant XOR parity(outcome bits listed in `mask`).
struct ParityRule {
  std::vector<int> mask;
  bool constant = false;

  bool eval(std::string_view outcome) const;
  friend bool operator==(const ParityRule&, const ParityRule&) = default;
};

// Affine GF(2) description of a correction table. It extends the table to
// every outcome, which is what the coherent correction circuit realizes.
struct CorrectionRule {
  ParityRule x;
  ParityRule z;

  Pauli operator()(std::string_view outcome) const;
  friend bool operator==(const CorrectionRule&, const CorrectionRule&) = default;
};

enum class Mode { Coherent, Measured };

std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view name);

// Message on qubit 0, channel on qubits 1..n; Bob holds the last qubit.
int protocol_width(const ChannelSpec& spec);
int bob_qubit(const ChannelSpec& spec);

// |M> (x) |channel>.
Vector compose(const MessageState& message, const ChannelState& channel);

// Everything before the corrections. `measured` lists every non-Bob qubit.
Circuit protocol_circuit(const ChannelSpec& spec);

// Brute-force Pauli search per reachable branch with two independent test
// messages. Throws std::logic_error if a branch has zero or several solutions.
CorrectionTable derive_corrections(const ChannelSpec& spec);

// Smallest-support affine rule reproducing `table`. Throws std::logic_error
// when no affine rule exists.
CorrectionRule fit_correction_rule(const CorrectionTable& table);

// Derived once per spec and cached; thread-safe.
const CorrectionRule& correction_rule(const ChannelSpec& spec);

// Controlled corrections with the measured qubits as controls and Bob as
// target: CNOTs for the X part, then CZs for the Z part.
Circuit correction_circuit(const ChannelSpec& spec, const CorrectionRule& rule);
Circuit correction_circuit(const ChannelSpec& spec);

struct Branch {
  std::string outcome;
  double probability = 0.0;
  Pauli correction = Pauli::I;
  // Bob's corrected state, normalized by `probability`.
  Matrix state;
  double fidelity = 0.0;
};

struct ProtocolRun {
  ChannelSpec spec;
  MessageState message;
  Mode mode = Mode::Coherent;
  // Bob's unnormalized output; in measured mode the probability-weighted sum
  // of the corrected branches.
  Matrix rho_out;
  double trace = 0.0;
  double fidelity = 0.0;
  // Measured mode only; outcomes with probability below 1e-14 are omitted.
  std::vector<Branch> branches;
};

// Noiseless channel.
ProtocolRun run(const ChannelSpec& spec, const MessageState& message, Mode mode);

// Channel given as an ensemble of unnormalized pure states, rho = sum |v><v|.
ProtocolRun run(const ChannelSpec& spec, const MessageState& message, Mode mode,
                const std::vector<Vector>& channel_ensemble);

// Channel given as a (possibly subnormalized) density matrix.
ProtocolRun run(const ChannelSpec& spec, const MessageState& message, Mode mode,
                const Matrix& channel_rho);

// Decomposes a PSD matrix into an ensemble; eigenvalues below 1e-14 dropped.
std::vector<Vector> density_ensemble(const Matrix& rho);

struct TableDelta {
  std::string outcome;
  // "-" marks a row missing on that side.
  std::string derived;
  std::string expected;
};

// Rows where the tables disagree, including rows present on one side only.
std::vector<TableDelta> compare_tables(const CorrectionTable& derived,
                                       const CorrectionTable& expected);

}  // namespace teleportlab

#endif  // TELEPORTLAB_TELEPORT_H_
