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

#include "teleportlab/config.h"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "teleportlab/channels.h"

namespace teleportlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("config: bad value '" + std::string(value) + "' for " +
                                std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("config: bad boolean '" + std::string(value) + "' for " +
                              std::string(key));
}

}  // namespace

void RunConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "channels") {
    channels = value;
  } else if (key == "noise") {
    noise = value;
  } else if (key == "eta_start") {
    eta_start = parse_number<double>(key, value);
  } else if (key == "eta_stop") {
    eta_stop = parse_number<double>(key, value);
  } else if (key == "eta_step") {
    eta_step = parse_number<double>(key, value);
  } else if (key == "input") {
    input = value;
  } else if (key == "theta") {
    theta = parse_number<double>(key, value);
  } else if (key == "phi") {
    phi = parse_number<double>(key, value);
  } else if (key == "samples") {
    samples = parse_number<int>(key, value);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "application") {
    application = value;
  } else if (key == "mode") {
    mode = value;
  } else if (key == "renormalize") {
    renormalize = parse_bool(key, value);
  } else if (key == "threads") {
    threads = parse_number<int>(key, value);
  } else if (key == "csv") {
    csv = value;
  } else if (key == "svg") {
    svg = value;
  } else {
    throw std::invalid_argument("config: unknown key '" + std::string(key) + "'");
  }
}

void RunConfig::apply(const std::map<std::string, std::string>& values) {
  for (const auto& [k, v] : values) set(k, v);
}

SweepConfig RunConfig::sweep_config() const {
  SweepConfig c;
  c.channels = select_variants(channels);
  c.kinds = parse_noise_list(noise);
  c.grid = make_grid(eta_start, eta_stop, eta_step);
  c.policy.kind = parse_input_kind(input);
  c.policy.theta = theta;
  c.policy.phi = phi;
  c.policy.samples = samples;
  c.policy.seed = seed;
  c.options.application = parse_application(application);
  c.options.mode = parse_mode(mode);
  c.options.renormalize = renormalize;
  c.threads = threads;
  c.validate();
  return c;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
    if (!out.emplace(key, std::string(trim(line.substr(eq + 1)))).second) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": repeated key '" +
                                  key + "'");
    }
  }
  return out;
}

RunConfig resolve_config(const std::map<std::string, std::string>& file_values,
                         std::optional<std::string> env_seed,
                         const std::map<std::string, std::string>& cli_values) {
  RunConfig c;
  c.apply(file_values);
  if (env_seed && !env_seed->empty()) c.set("seed", *env_seed);
  c.apply(cli_values);
  return c;
}

}  // namespace teleportlab
