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

#ifndef TELEPORTLAB_SYMBOLIC_H_
#define TELEPORTLAB_SYMBOLIC_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "teleportlab/channels.h"
#include "teleportlab/linalg.h"
#include "teleportlab/noise.h"

namespace teleportlab {

// Polynomial in s = sqrt(1 - eta) and t = sqrt(eta).
class Poly {
 public:
  Poly() = default;
  static Poly constant(Complex c) { return monomial(c, 0, 0); }
  static Poly monomial(Complex c, int s_power, int t_power);

  Poly& operator+=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  Complex eval(double eta) const;
  bool is_zero() const { return terms_.empty(); }
  // Keyed by (s power, t power).
  const std::map<std::pair<int, int>, Complex>& terms() const { return terms_; }
  // "s4+1/3t4"-style text; coefficients that are not small rationals print
  // as decimals.
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(std::pair<int, int> powers, Complex c);
  std::map<std::pair<int, int>, Complex> terms_;
};

// Basis index -> amplitude.
using SparseKet = std::map<std::uint64_t, Poly>;

// rho(eta) = scale * sum_k |v_k><v_k|, with every |v_k> a sparse ket.
struct SymbolicEnsemble {
  int n_qubits = 0;
  double scale = 1.0;
  std::vector<SparseKet> members;

  Matrix evaluate(double eta) const;
};

// Collective noise on a channel computed without dense linear algebra: each
// Kraus operator sends a basis ket to a single basis ket, so E^{(x)n} acts
// term by term. The channel enters as its +-1 sign pattern, with
// scale = 1 / (number of nonzero amplitudes).
SymbolicEnsemble regenerated_form(const ChannelSpec& spec, NoiseKind kind);

}  // namespace teleportlab

#endif  // TELEPORTLAB_SYMBOLIC_H_
