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

#include "teleportlab/teleport.h"

#include <array>
#include <bit>
#include <cmath>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include <Eigen/Eigenvalues>

namespace teleportlab {
namespace {

constexpr std::array kPaulis = {Pauli::I, Pauli::X, Pauli::Z, Pauli::ZX};

// Branches below this norm are unreachable.
constexpr double kReachableNorm = 1e-9;
constexpr double kBranchFloor = 1e-14;

std::string outcome_label(std::size_t index, int bits) {
  std::string s(static_cast<std::size_t>(bits), '0');
  for (int i = 0; i < bits; ++i) {
    if ((index >> (bits - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

// Bob's unnormalized two-amplitude slice for every outcome. Bob is the least
// significant qubit, so outcome o owns indices 2o and 2o+1.
std::vector<Vector> bob_slices(const Vector& state) {
  std::vector<Vector> out(static_cast<std::size_t>(state.size() / 2));
  for (std::size_t o = 0; o < out.size(); ++o) {
    out[o] = state.segment(static_cast<Eigen::Index>(2 * o), 2);
  }
  return out;
}

bool recovers(Pauli p, const Vector& branch, const Vector& message) {
  const double norm = branch.norm();
  const Complex overlap = message.dot(pauli_matrix(p) * branch);
  return std::abs(std::abs(overlap) / norm - 1.0) < kReachableNorm;
}

}  // namespace

std::string_view pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Z: return "Z";
    case Pauli::ZX: return "ZX";
  }
  throw std::invalid_argument("unknown Pauli");
}

Pauli parse_pauli(std::string_view name) {
  for (Pauli p : kPaulis) {
    if (pauli_name(p) == name) return p;
  }
  throw std::invalid_argument("unknown correction '" + std::string(name) + "'");
}

Matrix pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return Matrix::Identity(2, 2);
    case Pauli::X: return pauli_x();
    case Pauli::Z: return pauli_z();
    case Pauli::ZX: return pauli_z() * pauli_x();
  }
  throw std::invalid_argument("unknown Pauli");
}

Vector MessageState::vector() const {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("message angles must be finite");
  }
  Vector v(2);
  v << std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2);
  return v;
}

bool ParityRule::eval(std::string_view outcome) const {
  bool bit = constant;
  for (int i : mask) {
    if (i < 0 || static_cast<std::size_t>(i) >= outcome.size()) {
      throw std::invalid_argument("parity rule index outside outcome");
    }
    if (outcome[static_cast<std::size_t>(i)] == '1') bit = !bit;
  }
  return bit;
}

Pauli CorrectionRule::operator()(std::string_view outcome) const {
  const bool xb = x.eval(outcome);
  const bool zb = z.eval(outcome);
  if (xb && zb) return Pauli::ZX;
  if (xb) return Pauli::X;
  if (zb) return Pauli::Z;
  return Pauli::I;
}

std::string_view mode_name(Mode m) { return m == Mode::Coherent ? "coherent" : "measured"; }

Mode parse_mode(std::string_view name) {
  if (name == "coherent") return Mode::Coherent;
  if (name == "measured") return Mode::Measured;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

int protocol_width(const ChannelSpec& spec) { return family_qubit_count(spec.family) + 1; }
int bob_qubit(const ChannelSpec& spec) { return family_qubit_count(spec.family); }

Vector compose(const MessageState& message, const ChannelState& channel) {
  return kron(message.vector(), channel.state);
}

Circuit protocol_circuit(const ChannelSpec& spec) {
  spec.validate();
  Circuit c(protocol_width(spec));
  c.add(Gate::cnot(0, 1)).add(Gate::h(0));
  switch (spec.family) {
    case Family::Bell:
      break;
    case Family::GHZ:
    case Family::Cluster2:
    case Family::Cluster3:
      c.add(Gate::h(2));
      break;
    case Family::Brown:
      // Maps the ancilla patterns onto |011>/|100> branches.
      c.add(Gate::cnot(4, 5)).add(Gate::h(4)).add(Gate::swap(4, 5)).add(Gate::cnot(5, 3));
      c.add(Gate::x(5)).add(Gate::x(3)).add(Gate::cnot(2, 5));
      break;
    case Family::Borras:
      // Maps the ancilla patterns onto |0000>/|1001> branches.
      c.add(Gate::cnot(5, 6)).add(Gate::h(5)).add(Gate::cnot(3, 5)).add(Gate::cnot(2, 6));
      c.add(Gate::cnot(3, 6)).add(Gate::cnot(4, 6)).add(Gate::cnot(6, 5)).add(Gate::cz(4, 2));
      c.add(Gate::cz(4, 3)).add(Gate::z(6)).add(Gate::cz(6, 2)).add(Gate::h(3)).add(Gate::h(4));
      c.add(Gate::cnot(2, 5)).add(Gate::cnot(2, 6)).add(Gate::cz(2, 6));
      break;
  }
  for (int q = 0; q < c.n_qubits - 1; ++q) c.measured.push_back(q);
  return c;
}

CorrectionTable derive_corrections(const ChannelSpec& spec) {
  const ChannelState channel = build_channel(spec);
  const Circuit proto = protocol_circuit(spec);
  const std::array<MessageState, 2> probes = {MessageState{1.0, 0.7}, MessageState{2.1, 2.3}};
  std::array<std::vector<Vector>, 2> slices;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    slices[k] = bob_slices(simulate(proto, compose(probes[k], channel)));
  }
  const int bits = proto.n_qubits - 1;
  CorrectionTable table;
  for (std::size_t o = 0; o < slices[0].size(); ++o) {
    const bool reach0 = slices[0][o].norm() > kReachableNorm;
    const bool reach1 = slices[1][o].norm() > kReachableNorm;
    if (reach0 != reach1) {
      throw std::logic_error(spec.id() + ": branch reachability depends on the message");
    }
    if (!reach0) continue;
    std::vector<Pauli> hits;
    for (Pauli p : kPaulis) {
      if (recovers(p, slices[0][o], probes[0].vector()) &&
          recovers(p, slices[1][o], probes[1].vector())) {
        hits.push_back(p);
      }
    }
    const std::string label = outcome_label(o, bits);
    if (hits.size() != 1) {
      throw std::logic_error(spec.id() + ": outcome " + label + " has " +
                             std::to_string(hits.size()) + " recovering corrections");
    }
    table[label] = hits.front();
  }
  return table;
}

CorrectionRule fit_correction_rule(const CorrectionTable& table) {
  if (table.empty()) throw std::logic_error("cannot fit an empty correction table");
  const int k = static_cast<int>(table.begin()->first.size());
  auto fit_bit = [&](auto component, const char* what) {
    std::optional<std::tuple<int, std::vector<int>, bool>> best;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < k; ++i) {
        if ((mask >> (k - 1 - i)) & 1) idx.push_back(i);
      }
      for (bool c : {false, true}) {
        const ParityRule rule{idx, c};
        bool ok = true;
        for (const auto& [outcome, p] : table) {
          if (rule.eval(outcome) != component(p)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        auto key = std::make_tuple(std::popcount(mask), idx, c);
        if (!best || key < *best) best = std::move(key);
      }
    }
    if (!best) throw std::logic_error(std::string("no affine rule for the ") + what + " part");
    return ParityRule{std::get<1>(*best), std::get<2>(*best)};
  };
  CorrectionRule rule;
  rule.x = fit_bit([](Pauli p) { return p == Pauli::X || p == Pauli::ZX; }, "X");
  rule.z = fit_bit([](Pauli p) { return p == Pauli::Z || p == Pauli::ZX; }, "Z");
  return rule;
}

const CorrectionRule& correction_rule(const ChannelSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, CorrectionRule> cache;
  const std::string key = spec.id();
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  CorrectionRule rule = fit_correction_rule(derive_corrections(spec));
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(rule)).first->second;
}

Circuit correction_circuit(const ChannelSpec& spec, const CorrectionRule& rule) {
  const int bob = bob_qubit(spec);
  Circuit c(protocol_width(spec));
  for (int i : rule.x.mask) c.add(Gate::cnot(i, bob));
  if (rule.x.constant) c.add(Gate::x(bob));
  for (int i : rule.z.mask) c.add(Gate::cz(i, bob));
  if (rule.z.constant) c.add(Gate::z(bob));
  c.validate();
  return c;
}

Circuit correction_circuit(const ChannelSpec& spec) {
  return correction_circuit(spec, correction_rule(spec));
}

std::vector<Vector> density_ensemble(const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  std::vector<Vector> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda < -kSpectralTol) throw std::invalid_argument("density matrix is not PSD");
    if (lambda > kBranchFloor) out.push_back(std::sqrt(lambda) * solver.eigenvectors().col(i));
  }
  return out;
}

ProtocolRun run(const ChannelSpec& spec, const MessageState& message, Mode mode,
                const std::vector<Vector>& channel_ensemble) {
  spec.validate();
  const Eigen::Index channel_dim = Eigen::Index{1} << family_qubit_count(spec.family);
  const Vector m = message.vector();
  const int bob = bob_qubit(spec);
  const std::array<int, 1> keep = {bob};

  ProtocolRun result{spec, message, mode, Matrix::Zero(2, 2), 0.0, 0.0, {}};
  if (mode == Mode::Coherent) {
    Circuit full = protocol_circuit(spec);
    full.append(correction_circuit(spec));
    for (const Vector& v : channel_ensemble) {
      if (v.size() != channel_dim) throw std::invalid_argument("channel dimension mismatch");
      result.rho_out += reduce_pure(simulate(full, kron(m, v)), keep);
    }
  } else {
    const Circuit proto = protocol_circuit(spec);
    const int bits = proto.n_qubits - 1;
    std::vector<Matrix> sigma(std::size_t{1} << bits, Matrix::Zero(2, 2));
    for (const Vector& v : channel_ensemble) {
      if (v.size() != channel_dim) throw std::invalid_argument("channel dimension mismatch");
      const auto slices = bob_slices(simulate(proto, kron(m, v)));
      for (std::size_t o = 0; o < slices.size(); ++o) sigma[o] += slices[o] * slices[o].adjoint();
    }
    const CorrectionRule& rule = correction_rule(spec);
    for (std::size_t o = 0; o < sigma.size(); ++o) {
      const std::string label = outcome_label(o, bits);
      const Pauli p = rule(label);
      const Matrix pm = pauli_matrix(p);
      const Matrix corrected = pm * sigma[o] * pm.adjoint();
      result.rho_out += corrected;
      const double prob = sigma[o].trace().real();
      if (prob <= kBranchFloor) continue;
      Branch b{label, prob, p, corrected / prob, 0.0};
      b.fidelity = fidelity_pure(m, b.state);
      result.branches.push_back(std::move(b));
    }
  }
  result.trace = result.rho_out.trace().real();
  result.fidelity = fidelity_pure(m, result.rho_out);
  return result;
}

ProtocolRun run(const ChannelSpec& spec, const MessageState& message, Mode mode) {
  return run(spec, message, mode, std::vector<Vector>{build_channel(spec).state});
}

ProtocolRun run(const ChannelSpec& spec, const MessageState& message, Mode mode,
                const Matrix& channel_rho) {
  return run(spec, message, mode, density_ensemble(channel_rho));
}

std::vector<TableDelta> compare_tables(const CorrectionTable& derived,
                                       const CorrectionTable& expected) {
  std::set<std::string> keys;
  for (const auto& [k, v] : derived) keys.insert(k);
  for (const auto& [k, v] : expected) keys.insert(k);
  std::vector<TableDelta> out;
  for (const auto& k : keys) {
    const auto d = derived.find(k);
    const auto e = expected.find(k);
    const std::string ds = d == derived.end() ? "-" : std::string(pauli_name(d->second));
    const std::string es = e == expected.end() ? "-" : std::string(pauli_name(e->second));
    if (ds != es) out.push_back({k, ds, es});
  }
  return out;
}

}  // namespace teleportlab
