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

#ifndef TELEPORTLAB_FIDELITY_H_
#define TELEPORTLAB_FIDELITY_H_

#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "teleportlab/channels.h"
#include "teleportlab/noise.h"
#include "teleportlab/teleport.h"

namespace teleportlab {

enum class InputKind { Fixed, Samples, Axial };

std::string_view input_kind_name(InputKind kind);
InputKind parse_input_kind(std::string_view name);

struct InputPolicy {
  InputKind kind = InputKind::Fixed;
  // Fixed only.
  double theta = std::numbers::pi / 2;
  double phi = 0.0;
  // Samples only: Haar-uniform draws from a seeded mt19937_64.
  int samples = 200;
  std::uint64_t seed = 2026;

  void validate() const;
  std::string descriptor() const;
};

// Fixed: one state. Axial: theta in {0, pi} plus four equatorial phases.
std::vector<MessageState> policy_messages(const InputPolicy& policy);

struct FidelityOptions {
  Application application = Application::Collective;
  Mode mode = Mode::Coherent;
  // Divide by trace(rho_out). Off by default: collective outputs are
  // subnormalized and reported as-is.
  bool renormalize = false;
};

// Noise on every channel qubit, then the protocol, then <M|rho_out|M>.
double noisy_fidelity(const ChannelSpec& spec, const NoiseModel& model,
                      const MessageState& message, const FidelityOptions& options = {});

double average_fidelity(const ChannelSpec& spec, const NoiseModel& model,
                        const InputPolicy& policy, const FidelityOptions& options = {});

// 51 points, 0 to 1 in steps of 0.02.
std::vector<double> default_grid();
// Inclusive grid; throws std::invalid_argument unless step divides the range.
std::vector<double> make_grid(double start, double stop, double step);
// Nonempty, sorted, within [0, 1].
void validate_grid(const std::vector<double>& grid);

struct SweepConfig {
  std::vector<ChannelSpec> channels;
  std::vector<NoiseKind> kinds;
  std::vector<double> grid = default_grid();
  InputPolicy policy;
  FidelityOptions options;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;

  void validate() const;
};

struct SweepRow {
  std::string channel;      // family name
  std::string family_bits;  // selector bits, empty for Brown and Borras
  NoiseKind noise = NoiseKind::BitFlip;
  Application mode = Application::Collective;
  double eta = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double fidelity = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

using SweepResult = std::vector<SweepRow>;

// One row per (channel, noise, eta, input message), in that nesting order
// regardless of thread count.
SweepResult sweep(const SweepConfig& config);

}  // namespace teleportlab

#endif  // TELEPORTLAB_FIDELITY_H_
