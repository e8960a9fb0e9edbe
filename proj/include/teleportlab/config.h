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

#ifndef TELEPORTLAB_CONFIG_H_
#define TELEPORTLAB_CONFIG_H_

#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "teleportlab/fidelity.h"

namespace teleportlab {

inline constexpr std::string_view kSeedEnvVar = "TELEPORTLAB_SEED";

// Settings shared by the sweep and plot commands. Keys accepted by set()
// match the member names.
struct RunConfig {
  std::string channels = "all";
  std::string noise = "all";
  double eta_start = 0.0;
  double eta_stop = 1.0;
  double eta_step = 0.02;
  std::string input = "fixed";
  double theta = std::numbers::pi / 2;
  double phi = 0.0;
  int samples = 200;
  std::uint64_t seed = 2026;
  std::string application = "collective";
  std::string mode = "coherent";
  bool renormalize = false;
  int threads = 0;
  std::string csv = "sweep.csv";
  std::string svg;

  // Throws std::invalid_argument on an unknown key or unparsable value.
  void set(std::string_view key, std::string_view value);
  void apply(const std::map<std::string, std::string>& values);
  // Resolves selectors and grid; throws std::invalid_argument when invalid.
  SweepConfig sweep_config() const;
};

// "key = value" lines; '#' starts a comment. Throws std::invalid_argument on
// a line without '=' or a repeated key.
std::map<std::string, std::string> parse_key_values(std::string_view text);

// Defaults < config file < TELEPORTLAB_SEED < command-line flags.
RunConfig resolve_config(const std::map<std::string, std::string>& file_values,
                         std::optional<std::string> env_seed,
                         const std::map<std::string, std::string>& cli_values);

}  // namespace teleportlab

#endif  // TELEPORTLAB_CONFIG_H_
