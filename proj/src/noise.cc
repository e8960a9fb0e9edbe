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

#include "teleportlab/noise.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "teleportlab/circuit.h"
#include "teleportlab/teleport.h"

namespace teleportlab {
namespace {

std::vector<int> channel_qubits(const ChannelSpec& spec) {
  std::vector<int> q(static_cast<std::size_t>(family_qubit_count(spec.family)));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

}  // namespace

std::string_view noise_name(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::BitFlip: return "bit-flip";
    case NoiseKind::PhaseFlip: return "phase-flip";
    case NoiseKind::BitPhaseFlip: return "bit-phase-flip";
    case NoiseKind::AmplitudeDamping: return "amplitude";
    case NoiseKind::PhaseDamping: return "phase-damping";
    case NoiseKind::Depolarizing: return "depolarizing";
  }
  throw std::invalid_argument("unknown noise kind");
}

NoiseKind parse_noise(std::string_view name) {
  if (name == "amplitude-damping") return NoiseKind::AmplitudeDamping;
  for (NoiseKind k : kAllNoiseKinds) {
    if (noise_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown noise model '" + std::string(name) + "'");
}

std::vector<NoiseKind> parse_noise_list(std::string_view list) {
  std::vector<NoiseKind> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t end = list.find(',', pos);
    if (end == std::string_view::npos) end = list.size();
    const std::string_view item = list.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(out.end(), kAllNoiseKinds.begin(), kAllNoiseKinds.end());
    } else {
      out.push_back(parse_noise(item));
    }
  }
  if (out.empty()) throw std::invalid_argument("empty noise list");
  return out;
}

void NoiseModel::validate() const {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("noise strength must lie in [0, 1], got " + std::to_string(eta));
  }
}

KrausSet kraus_set(const NoiseModel& model) {
  model.validate();
  const double keep = std::sqrt(1.0 - model.eta);
  const double hit = std::sqrt(model.eta);
  const Matrix id = Matrix::Identity(2, 2);
  switch (model.kind) {
    case NoiseKind::BitFlip: return {keep * id, hit * pauli_x()};
    case NoiseKind::PhaseFlip: return {keep * id, hit * pauli_z()};
    case NoiseKind::BitPhaseFlip: return {keep * id, hit * pauli_y()};
    case NoiseKind::AmplitudeDamping: {
      Matrix e0 = Matrix::Zero(2, 2), e1 = Matrix::Zero(2, 2);
      e0(0, 0) = 1.0;
      e0(1, 1) = keep;
      e1(0, 1) = hit;
      return {e0, e1};
    }
    case NoiseKind::PhaseDamping: {
      Matrix e1 = Matrix::Zero(2, 2), e2 = Matrix::Zero(2, 2);
      e1(0, 0) = hit;
      e2(1, 1) = hit;
      return {keep * id, e1, e2};
    }
    case NoiseKind::Depolarizing: {
      const double d = std::sqrt(model.eta / 3.0);
      return {keep * id, d * pauli_x(), d * pauli_y(), d * pauli_z()};
    }
  }
  throw std::invalid_argument("unknown noise kind");
}

double completeness_residual(const KrausSet& ks) {
  Matrix sum = Matrix::Zero(2, 2);
  for (const Matrix& e : ks) sum += e.adjoint() * e;
  return (sum - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff();
}

std::string_view application_name(Application a) {
  return a == Application::Collective ? "collective" : "independent";
}

Application parse_application(std::string_view name) {
  if (name == "collective") return Application::Collective;
  if (name == "independent") return Application::Independent;
  throw std::invalid_argument("unknown noise application '" + std::string(name) + "'");
}

Matrix apply_collective(const Matrix& rho, const KrausSet& ks, std::span<const int> qubits) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& e : ks) {
    Matrix term = rho;
    for (int q : qubits) apply_gate(term, e, std::span<const int>(&q, 1));
    out += term;
  }
  return out;
}

std::vector<Vector> apply_collective(const Vector& psi, const KrausSet& ks,
                                     std::span<const int> qubits) {
  std::vector<Vector> out;
  out.reserve(ks.size());
  for (const Matrix& e : ks) {
    Vector v = psi;
    for (int q : qubits) apply_gate(v, e, std::span<const int>(&q, 1));
    out.push_back(std::move(v));
  }
  return out;
}

Matrix apply_independent(const Matrix& rho, const KrausSet& ks, std::span<const int> qubits) {
  if (const double r = completeness_residual(ks); r > kAlgebraicTol) {
    throw std::invalid_argument("Kraus set is not trace preserving (residual " +
                                std::to_string(r) + ")");
  }
  Matrix cur = rho;
  for (int q : qubits) {
    Matrix next = Matrix::Zero(rho.rows(), rho.cols());
    for (const Matrix& e : ks) {
      Matrix term = cur;
      apply_gate(term, e, std::span<const int>(&q, 1));
      next += term;
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Vector> noisy_channel_ensemble(const ChannelSpec& spec, const NoiseModel& model,
                                           Application application) {
  const Vector psi = build_channel(spec).state;
  const KrausSet ks = kraus_set(model);
  const auto qubits = channel_qubits(spec);
  if (application == Application::Collective) return apply_collective(psi, ks, qubits);
  return density_ensemble(apply_independent(projector(psi), ks, qubits));
}

Matrix noisy_channel_density(const ChannelSpec& spec, const NoiseModel& model,
                             Application application) {
  const Matrix rho = projector(build_channel(spec).state);
  const KrausSet ks = kraus_set(model);
  const auto qubits = channel_qubits(spec);
  if (application == Application::Collective) return apply_collective(rho, ks, qubits);
  return apply_independent(rho, ks, qubits);
}

}  // namespace teleportlab
