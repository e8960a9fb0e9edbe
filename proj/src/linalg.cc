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

#include "teleportlab/linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace teleportlab {
namespace {

constexpr int kMaxQubits = 10;

void check_targets(std::span<const int> targets, int n) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n) {
      throw std::invalid_argument("qubit index " + std::to_string(targets[i]) +
                                  " out of range for " + std::to_string(n) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument("duplicate target qubit " + std::to_string(targets[i]));
      }
    }
  }
}

// Bit masks (in the global index) of each target, most significant local bit first.
std::vector<std::size_t> target_masks(std::span<const int> targets, int n) {
  std::vector<std::size_t> masks;
  masks.reserve(targets.size());
  for (int t : targets) masks.push_back(std::size_t{1} << (n - 1 - t));
  return masks;
}

std::size_t scatter(std::size_t local, const std::vector<std::size_t>& masks) {
  std::size_t out = 0;
  const std::size_t k = masks.size();
  for (std::size_t j = 0; j < k; ++j) {
    if ((local >> (k - 1 - j)) & 1) out |= masks[j];
  }
  return out;
}

template <typename Column>
void apply_local(Column&& v, const Matrix& gate, const std::vector<std::size_t>& masks,
                 std::size_t dim) {
  const std::size_t local_dim = std::size_t{1} << masks.size();
  std::size_t any_mask = 0;
  for (auto m : masks) any_mask |= m;
  std::vector<std::size_t> offsets(local_dim);
  for (std::size_t l = 0; l < local_dim; ++l) offsets[l] = scatter(l, masks);
  std::vector<Complex> in(local_dim);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & any_mask) continue;
    for (std::size_t l = 0; l < local_dim; ++l) in[l] = v(base | offsets[l]);
    for (std::size_t r = 0; r < local_dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < local_dim; ++c) acc += gate(r, c) * in[c];
      v(base | offsets[r]) = acc;
    }
  }
}

void check_gate_shape(const Matrix& gate, std::size_t n_targets) {
  const Eigen::Index expected = Eigen::Index{1} << n_targets;
  if (gate.rows() != expected || gate.cols() != expected) {
    throw std::invalid_argument("gate of dimension " + std::to_string(gate.rows()) + "x" +
                                std::to_string(gate.cols()) + " does not match " +
                                std::to_string(n_targets) + " target(s)");
  }
}

}  // namespace

int qubit_count(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || n > kMaxQubits) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a supported power of two");
  }
  return n;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Vector ket(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("empty ket label");
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("ket label must be binary");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return basis_state(static_cast<int>(bits.size()), index);
}

Vector basis_state(int n_qubits, std::size_t index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw std::invalid_argument("bad qubit count");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

Matrix embed(const Matrix& gate, std::span<const int> targets, int n) {
  check_gate_shape(gate, targets.size());
  check_targets(targets, n);
  const std::size_t dim = std::size_t{1} << n;
  Matrix out = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const auto masks = target_masks(targets, n);
  for (Eigen::Index c = 0; c < out.cols(); ++c) apply_local(out.col(c), gate, masks, dim);
  return out;
}

void apply_gate(Vector& state, const Matrix& gate, std::span<const int> targets) {
  const int n = qubit_count(state.size());
  check_gate_shape(gate, targets.size());
  check_targets(targets, n);
  apply_local(state, gate, target_masks(targets, n), static_cast<std::size_t>(state.size()));
}

void apply_gate(Matrix& rho, const Matrix& gate, std::span<const int> targets) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  const int n = qubit_count(rho.rows());
  check_gate_shape(gate, targets.size());
  check_targets(targets, n);
  const auto masks = target_masks(targets, n);
  const auto dim = static_cast<std::size_t>(rho.rows());
  for (Eigen::Index c = 0; c < rho.cols(); ++c) apply_local(rho.col(c), gate, masks, dim);
  // rho G^dagger = (G rho^dagger)^dagger
  Matrix adj = rho.adjoint();
  for (Eigen::Index c = 0; c < adj.cols(); ++c) apply_local(adj.col(c), gate, masks, dim);
  rho = adj.adjoint();
}

Matrix partial_trace(const Matrix& rho, std::span<const int> keep) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  const int n = qubit_count(rho.rows());
  if (keep.empty()) throw std::invalid_argument("keep list must be nonempty");
  check_targets(keep, n);
  const auto keep_masks = target_masks(keep, n);
  std::size_t keep_all = 0;
  for (auto m : keep_masks) keep_all |= m;
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t out_dim = std::size_t{1} << keep.size();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(out_dim), static_cast<Eigen::Index>(out_dim));
  std::vector<std::size_t> offsets(out_dim);
  for (std::size_t l = 0; l < out_dim; ++l) offsets[l] = scatter(l, keep_masks);
  for (std::size_t env = 0; env < dim; ++env) {
    if (env & keep_all) continue;
    for (std::size_t r = 0; r < out_dim; ++r) {
      for (std::size_t c = 0; c < out_dim; ++c) {
        out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +=
            rho(static_cast<Eigen::Index>(env | offsets[r]),
                static_cast<Eigen::Index>(env | offsets[c]));
      }
    }
  }
  return out;
}

Matrix reduce_pure(const Vector& v, std::span<const int> keep) {
  const int n = qubit_count(v.size());
  if (keep.empty()) throw std::invalid_argument("keep list must be nonempty");
  check_targets(keep, n);
  const auto keep_masks = target_masks(keep, n);
  std::size_t keep_all = 0;
  for (auto m : keep_masks) keep_all |= m;
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t out_dim = std::size_t{1} << keep.size();
  std::vector<std::size_t> offsets(out_dim);
  for (std::size_t l = 0; l < out_dim; ++l) offsets[l] = scatter(l, keep_masks);
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(out_dim), static_cast<Eigen::Index>(out_dim));
  Vector slice(static_cast<Eigen::Index>(out_dim));
  for (std::size_t env = 0; env < dim; ++env) {
    if (env & keep_all) continue;
    for (std::size_t l = 0; l < out_dim; ++l) {
      slice(static_cast<Eigen::Index>(l)) = v(static_cast<Eigen::Index>(env | offsets[l]));
    }
    out.noalias() += slice * slice.adjoint();
  }
  return out;
}

Matrix projector(const Vector& v) { return v * v.adjoint(); }

double fidelity_pure(const Vector& psi, const Matrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() != psi.size()) {
    throw std::invalid_argument("fidelity_pure: dimension mismatch");
  }
  if (std::abs(psi.squaredNorm() - 1.0) > kAlgebraicTol) {
    throw std::invalid_argument("fidelity_pure: state is not normalized");
  }
  const Complex f = psi.dot(rho * psi);
  if (std::abs(f.imag()) > kAlgebraicTol) {
    throw std::domain_error("fidelity_pure: imaginary residue " + std::to_string(f.imag()));
  }
  double value = f.real();
  if (value < 0.0) {
    if (value < -kSpectralTol) throw std::domain_error("fidelity_pure: negative overlap");
    value = 0.0;
  } else if (value > 1.0) {
    if (value > 1.0 + kSpectralTol) throw std::domain_error("fidelity_pure: overlap above one");
    value = 1.0;
  }
  return value;
}

DensityDiagnostics validate_density(const Matrix& rho, bool subnormalized_ok) {
  DensityDiagnostics d;
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    d.hermiticity_residual = INFINITY;
    d.min_eigenvalue = -INFINITY;
    return d;
  }
  d.hermiticity_residual = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  const Complex tr = rho.trace();
  d.trace = tr.real();
  d.trace_imag = tr.imag();
  const bool trace_ok = subnormalized_ok ? d.trace <= 1.0 + kSpectralTol
                                         : std::abs(d.trace - 1.0) <= kSpectralTol;
  d.passed = d.hermiticity_residual <= kAlgebraicTol && d.min_eigenvalue >= -kSpectralTol &&
             trace_ok && std::abs(d.trace_imag) <= kAlgebraicTol;
  return d;
}

double unitarity_residual(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

namespace {

template <typename T>
bool phase_equal(const T& a, const T& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < tol) return a.cwiseAbs().maxCoeff() < tol;
  const Complex phase = a(r, c) / b(r, c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  return phase_equal(a, b, tol);
}

bool equal_up_to_phase(const Vector& a, const Vector& b, double tol) {
  return phase_equal(a, b, tol);
}

}  // namespace teleportlab
