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

#ifndef TELEPORTLAB_LINALG_H_
#define TELEPORTLAB_LINALG_H_

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace teleportlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerances shared across the library.
inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;

// Returns n such that dim == 2^n. Throws std::invalid_argument otherwise.
int qubit_count(Eigen::Index dim);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

// Computational basis ket. Bits are written big-endian: "01" is |0>|1>.
Vector ket(std::string_view bits);
Vector basis_state(int n_qubits, std::size_t index);

// Full 2^n x 2^n operator acting as `gate` on `targets` (first target is
// the most significant local bit) and as identity elsewhere.
Matrix embed(const Matrix& gate, std::span<const int> targets, int n);

// In-place local application. Equivalent to embed(...) * state but never
// materializes the full operator.
void apply_gate(Vector& state, const Matrix& gate, std::span<const int> targets);
// rho -> G rho G^dagger.
void apply_gate(Matrix& rho, const Matrix& gate, std::span<const int> targets);

// Reduced operator on `keep` (output qubit order follows `keep`).
Matrix partial_trace(const Matrix& rho, std::span<const int> keep);

// Bob-style reduction of a pure (possibly unnormalized) vector: the reduced
// operator on `keep` of |v><v|, without forming the full density matrix.
Matrix reduce_pure(const Vector& v, std::span<const int> keep);

Matrix projector(const Vector& v);

// <psi|rho|psi> for a normalized psi.
double fidelity_pure(const Vector& psi, const Matrix& rho);

struct DensityDiagnostics {
  double hermiticity_residual = 0.0;
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  double trace_imag = 0.0;
  bool passed = false;
};

DensityDiagnostics validate_density(const Matrix& rho, bool subnormalized_ok);

double unitarity_residual(const Matrix& u);

// max |a_ij - b_ij|. Throws std::invalid_argument on shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

// True when a = e^{i phi} b for some phi, within tol.
bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol);
bool equal_up_to_phase(const Vector& a, const Vector& b, double tol);

}  // namespace teleportlab

#endif  // TELEPORTLAB_LINALG_H_
