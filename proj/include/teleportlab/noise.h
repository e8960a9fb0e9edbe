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

#ifndef TELEPORTLAB_NOISE_H_
#define TELEPORTLAB_NOISE_H_

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "teleportlab/channels.h"
#include "teleportlab/linalg.h"

namespace teleportlab {

enum class NoiseKind {
  BitFlip,
  PhaseFlip,
  BitPhaseFlip,
  AmplitudeDamping,
  PhaseDamping,
  Depolarizing
};

inline constexpr std::array kAllNoiseKinds = {
    NoiseKind::BitFlip,          NoiseKind::PhaseFlip,    NoiseKind::BitPhaseFlip,
    NoiseKind::AmplitudeDamping, NoiseKind::PhaseDamping, NoiseKind::Depolarizing};

// Report labels: bit-flip, phase-flip, bit-phase-flip, amplitude,
// phase-damping, depolarizing.
std::string_view noise_name(NoiseKind kind);
// Accepts noise_name output plus "amplitude-damping".
NoiseKind parse_noise(std::string_view name);
// Comma-separated list or "all".
std::vector<NoiseKind> parse_noise_list(std::string_view list);

struct NoiseModel {
  NoiseKind kind = NoiseKind::BitFlip;
  double eta = 0.0;

  // Throws std::invalid_argument unless 0 <= eta <= 1.
  void validate() const;
};

using KrausSet = std::vector<Matrix>;

KrausSet kraus_set(const NoiseModel& model);

// max |sum E^dagger E - I|.
double completeness_residual(const KrausSet& ks);

enum class Application { Collective, Independent };

std::string_view application_name(Application a);
Application parse_application(std::string_view name);

// sum_j E_j^{(x)k} rho E_j^{(x)k dagger} over the k listed qubits. Not trace
// preserving in general.
Matrix apply_collective(const Matrix& rho, const KrausSet& ks, std::span<const int> qubits);
// Same map on a pure state: one unnormalized vector per Kraus index.
std::vector<Vector> apply_collective(const Vector& psi, const KrausSet& ks,
                                     std::span<const int> qubits);

// Per-qubit CPTP map, one listed qubit at a time. Throws std::invalid_argument
// if ks fails the completeness check.
Matrix apply_independent(const Matrix& rho, const KrausSet& ks, std::span<const int> qubits);

// Noisy channel state on all channel qubits, as an ensemble rho = sum |v><v|.
std::vector<Vector> noisy_channel_ensemble(const ChannelSpec& spec, const NoiseModel& model,
                                           Application application);
Matrix noisy_channel_density(const ChannelSpec& spec, const NoiseModel& model,
                             Application application);

}  // namespace teleportlab

#endif  // TELEPORTLAB_NOISE_H_
