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

#include "teleportlab/fidelity.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace teleportlab {

std::string_view input_kind_name(InputKind kind) {
  switch (kind) {
    case InputKind::Fixed: return "fixed";
    case InputKind::Samples: return "samples";
    case InputKind::Axial: return "axial";
  }
  throw std::invalid_argument("unknown input policy");
}

InputKind parse_input_kind(std::string_view name) {
  for (InputKind k : {InputKind::Fixed, InputKind::Samples, InputKind::Axial}) {
    if (input_kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown input policy '" + std::string(name) + "'");
}

void InputPolicy::validate() const {
  if (kind == InputKind::Fixed && (!std::isfinite(theta) || !std::isfinite(phi))) {
    throw std::invalid_argument("fixed input needs finite theta and phi");
  }
  if (kind == InputKind::Samples && samples < 1) {
    throw std::invalid_argument("sample count must be at least 1");
  }
}

std::string InputPolicy::descriptor() const {
  switch (kind) {
    case InputKind::Fixed: return "fixed";
    case InputKind::Samples:
      return "samples(" + std::to_string(samples) + ",seed=" + std::to_string(seed) + ")";
    case InputKind::Axial: return "axial";
  }
  throw std::invalid_argument("unknown input policy");
}

std::vector<MessageState> policy_messages(const InputPolicy& policy) {
  policy.validate();
  constexpr double pi = std::numbers::pi;
  switch (policy.kind) {
    case InputKind::Fixed:
      return {{policy.theta, policy.phi}};
    case InputKind::Axial:
      return {{0.0, 0.0},    {pi, 0.0},          {pi / 2, 0.0},
              {pi / 2, pi / 2}, {pi / 2, pi}, {pi / 2, 3 * pi / 2}};
    case InputKind::Samples: {
      std::mt19937_64 rng(policy.seed);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      std::vector<MessageState> out;
      out.reserve(static_cast<std::size_t>(policy.samples));
      for (int i = 0; i < policy.samples; ++i) {
        const double u = unit(rng);
        const double v = unit(rng);
        out.push_back({std::acos(1.0 - 2.0 * u), 2.0 * pi * v});
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown input policy");
}

double noisy_fidelity(const ChannelSpec& spec, const NoiseModel& model,
                      const MessageState& message, const FidelityOptions& options) {
  const auto ensemble = noisy_channel_ensemble(spec, model, options.application);
  const ProtocolRun r = run(spec, message, options.mode, ensemble);
  if (!options.renormalize) return r.fidelity;
  if (r.trace <= 1e-15) return 0.0;
  return std::clamp(r.fidelity / r.trace, 0.0, 1.0);
}

double average_fidelity(const ChannelSpec& spec, const NoiseModel& model,
                        const InputPolicy& policy, const FidelityOptions& options) {
  const auto messages = policy_messages(policy);
  double sum = 0.0;
  for (const MessageState& m : messages) sum += noisy_fidelity(spec, model, m, options);
  return sum / static_cast<double>(messages.size());
}

std::vector<double> default_grid() { return make_grid(0.0, 1.0, 0.02); }

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) throw std::invalid_argument("bad grid bounds");
  const double span = stop - start;
  const long intervals = std::lround(span / step);
  if (std::abs(static_cast<double>(intervals) * step - span) > 1e-9) {
    throw std::invalid_argument("grid step does not divide the range");
  }
  std::vector<double> grid;
  for (long i = 0; i <= intervals; ++i) {
    grid.push_back(intervals == 0 ? start
                                  : start + span * static_cast<double>(i) /
                                                static_cast<double>(intervals));
  }
  validate_grid(grid);
  return grid;
}

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty eta grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
      throw std::invalid_argument("eta grid value outside [0, 1]");
    }
    if (i > 0 && grid[i] < grid[i - 1]) throw std::invalid_argument("eta grid is not sorted");
  }
}

void SweepConfig::validate() const {
  if (channels.empty()) throw std::invalid_argument("sweep needs at least one channel");
  if (kinds.empty()) throw std::invalid_argument("sweep needs at least one noise model");
  for (const auto& c : channels) c.validate();
  validate_grid(grid);
  policy.validate();
  if (threads < 0) throw std::invalid_argument("thread count must be non-negative");
}

SweepResult sweep(const SweepConfig& config) {
  config.validate();
  const auto messages = policy_messages(config.policy);
  const std::size_t per_cell = messages.size();
  const std::size_t cells = config.channels.size() * config.kinds.size() * config.grid.size();
  SweepResult rows(cells * per_cell);

  auto work = [&](std::size_t cell) {
    const std::size_t e = cell % config.grid.size();
    const std::size_t k = (cell / config.grid.size()) % config.kinds.size();
    const std::size_t c = cell / (config.grid.size() * config.kinds.size());
    const ChannelSpec& spec = config.channels[c];
    const NoiseModel model{config.kinds[k], config.grid[e]};
    for (std::size_t m = 0; m < per_cell; ++m) {
      SweepRow& row = rows[cell * per_cell + m];
      row.channel = family_name(spec.family);
      row.family_bits = spec.bits_string();
      row.noise = model.kind;
      row.mode = config.options.application;
      row.eta = model.eta;
      row.theta = messages[m].theta;
      row.phi = messages[m].phi;
      row.fidelity = noisy_fidelity(spec, model, messages[m], config.options);
    }
  };

  unsigned n_threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, cells));
  if (n_threads <= 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) work(cell);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t cell = next++; cell < cells; cell = next++) {
        try {
          work(cell);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

}  // namespace teleportlab
