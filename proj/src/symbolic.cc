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

#include "teleportlab/symbolic.h"

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace teleportlab {
namespace {

constexpr double kDropCoefficient = 1e-15;

// Writes |v| as a small rational when one fits.
std::string rational(double v) {
  for (int den = 1; den <= 1000; ++den) {
    const double num = v * den;
    if (std::abs(num - std::round(num)) < 1e-9 * den) {
      const long n = std::lround(num);
      return den == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(den);
    }
  }
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

std::string powers(int s, int t) {
  std::string out;
  if (s) out += "s" + std::to_string(s);
  if (t) out += "t" + std::to_string(t);
  return out;
}

void append_monomial(std::string& out, double c, bool imaginary, int s, int t) {
  if (c == 0.0) return;
  out += c < 0 ? "-" : (out.empty() ? "" : "+");
  const double mag = std::abs(c);
  const std::string p = powers(s, t);
  const bool unit = std::abs(mag - 1.0) < 1e-12;
  if (!unit || (p.empty() && !imaginary)) out += rational(mag);
  if (imaginary) out += "i";
  out += p;
}

// Column action of a monomial 2x2 operator: column -> (row, coefficient).
struct SymbolicKraus {
  std::array<std::optional<std::pair<int, Poly>>, 2> column;
};

std::vector<SymbolicKraus> symbolic_kraus(NoiseKind kind) {
  const Poly one = Poly::constant(1.0);
  const Poly s = Poly::monomial(1.0, 1, 0);
  const Poly t = Poly::monomial(1.0, 0, 1);
  const Complex i(0.0, 1.0);
  auto scaled = [](const Poly& p, Complex c) { return Poly::constant(c) * p; };
  const SymbolicKraus keep{{std::pair{0, s}, std::pair{1, s}}};
  auto x = [&](Complex c) {
    return SymbolicKraus{{std::pair{1, scaled(t, c)}, std::pair{0, scaled(t, c)}}};
  };
  auto y = [&](Complex c) {
    return SymbolicKraus{{std::pair{1, scaled(t, c * i)}, std::pair{0, scaled(t, -c * i)}}};
  };
  auto z = [&](Complex c) {
    return SymbolicKraus{{std::pair{0, scaled(t, c)}, std::pair{1, scaled(t, -c)}}};
  };
  switch (kind) {
    case NoiseKind::BitFlip: return {keep, x(1.0)};
    case NoiseKind::PhaseFlip: return {keep, z(1.0)};
    case NoiseKind::BitPhaseFlip: return {keep, y(1.0)};
    case NoiseKind::AmplitudeDamping:
      return {SymbolicKraus{{std::pair{0, one}, std::pair{1, s}}},
              SymbolicKraus{{std::nullopt, std::pair{0, t}}}};
    case NoiseKind::PhaseDamping:
      return {keep, SymbolicKraus{{std::pair{0, t}, std::nullopt}},
              SymbolicKraus{{std::nullopt, std::pair{1, t}}}};
    case NoiseKind::Depolarizing: {
      const double d = 1.0 / std::sqrt(3.0);
      return {keep, x(d), y(d), z(d)};
    }
  }
  throw std::invalid_argument("unknown noise kind");
}

}  // namespace

Poly Poly::monomial(Complex c, int s_power, int t_power) {
  Poly p;
  p.add_term({s_power, t_power}, c);
  return p;
}

void Poly::add_term(std::pair<int, int> powers, Complex c) {
  Complex& slot = terms_[powers];
  slot += c;
  if (std::abs(slot.real()) < kDropCoefficient) slot.real(0.0);
  if (std::abs(slot.imag()) < kDropCoefficient) slot.imag(0.0);
  if (slot == Complex(0.0, 0.0)) terms_.erase(powers);
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [k, c] : terms_) out.terms_[k] = -c;
  return out;
}

Complex Poly::eval(double eta) const {
  const double s = std::sqrt(1.0 - eta);
  const double t = std::sqrt(eta);
  Complex sum = 0.0;
  for (const auto& [k, c] : terms_) sum += c * std::pow(s, k.first) * std::pow(t, k.second);
  return sum;
}

std::string Poly::to_string() const {
  std::string out;
  for (const auto& [k, c] : terms_) {
    append_monomial(out, c.real(), false, k.first, k.second);
    append_monomial(out, c.imag(), true, k.first, k.second);
  }
  return out.empty() ? "0" : out;
}

Matrix SymbolicEnsemble::evaluate(double eta) const {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix rho = Matrix::Zero(dim, dim);
  for (const SparseKet& member : members) {
    Vector v = Vector::Zero(dim);
    for (const auto& [index, amp] : member) v(static_cast<Eigen::Index>(index)) = amp.eval(eta);
    rho.noalias() += v * v.adjoint();
  }
  return scale * rho;
}

SymbolicEnsemble regenerated_form(const ChannelSpec& spec, NoiseKind kind) {
  const Vector state = tabulated_state(spec);
  const int n = family_qubit_count(spec.family);
  const double peak = state.cwiseAbs().maxCoeff();
  SparseKet pattern;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    if (std::abs(state(i)) < 0.5 * peak) continue;
    const Complex ratio = state(i) / peak;
    const double sign = ratio.real() > 0 ? 1.0 : -1.0;
    if (std::abs(ratio - sign) > kAlgebraicTol) {
      throw std::logic_error(spec.id() + " is not an equal-magnitude real state");
    }
    pattern[static_cast<std::uint64_t>(i)] = Poly::constant(sign);
  }

  SymbolicEnsemble out;
  out.n_qubits = n;
  out.scale = 1.0 / static_cast<double>(pattern.size());
  for (const SymbolicKraus& e : symbolic_kraus(kind)) {
    SparseKet member;
    for (const auto& [index, amp] : pattern) {
      std::uint64_t image = 0;
      Poly coef = amp;
      bool killed = false;
      for (int q = 0; q < n; ++q) {
        const int shift = n - 1 - q;
        const auto& col = e.column[(index >> shift) & 1];
        if (!col) {
          killed = true;
          break;
        }
        image |= static_cast<std::uint64_t>(col->first) << shift;
        coef = coef * col->second;
      }
      if (!killed) member[image] += coef;
    }
    std::erase_if(member, [](const auto& kv) { return kv.second.is_zero(); });
    if (!member.empty()) out.members.push_back(std::move(member));
  }
  return out;
}

}  // namespace teleportlab
