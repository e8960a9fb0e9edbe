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

#ifndef TELEPORTLAB_CHANNELS_H_
#define TELEPORTLAB_CHANNELS_H_

#include <string>
#include <string_view>
#include <vector>

#include "teleportlab/circuit.h"
#include "teleportlab/linalg.h"

namespace teleportlab {

enum class Family { Bell, GHZ, Cluster2, Cluster3, Brown, Borras };

std::string_view family_name(Family f);
// Accepts the lower-case names produced by family_name. Throws std::invalid_argument.
Family parse_family(std::string_view name);
int family_bit_count(Family f);
int family_qubit_count(Family f);

struct ChannelSpec {
  Family family = Family::Bell;
  std::vector<int> bits;

  // Throws std::invalid_argument when bits do not fit the family.
  void validate() const;
  // "bell-00", "ghz-101", "brown".
  std::string id() const;
  std::string bits_string() const;

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

// Parses "bell-01", "ghz-101", "brown". Throws std::invalid_argument.
ChannelSpec parse_channel_id(std::string_view id);
ChannelSpec make_spec(Family f, std::string_view bits);

struct ChannelState {
  ChannelSpec spec;
  Vector state;
  int n_qubits = 0;
};

// Preparation circuit on the channel's own qubits, starting from |0...0>.
Circuit prep_circuit(const ChannelSpec& spec);

// Simulates prep_circuit and checks the result against the tabulated
// amplitudes; throws std::logic_error on disagreement.
ChannelState build_channel(const ChannelSpec& spec);

// Tabulated amplitudes, independent of the preparation circuits.
Vector tabulated_state(const ChannelSpec& spec);

// 4 Bell, 8 GHZ, 4 two-qubit cluster, 8 three-qubit cluster, Brown, Borras.
std::vector<ChannelSpec> enumerate_variants();

// Resolves "all", a family name, or a variant id; comma-separated lists allowed.
std::vector<ChannelSpec> select_variants(std::string_view selector);

}  // namespace teleportlab

#endif  // TELEPORTLAB_CHANNELS_H_
