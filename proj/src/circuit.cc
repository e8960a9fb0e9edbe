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

#include "teleportlab/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace teleportlab {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::ControlledU: return "CU";
  }
  throw std::invalid_argument("unknown gate kind");
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      return 1;
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::ControlledU:
      return 2;
  }
  throw std::invalid_argument("unknown gate kind");
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

namespace {

Matrix controlled_block(const Matrix& u) {
  Matrix m = Matrix::Identity(4, 4);
  m.block(2, 2, 2, 2) = u;
  return m;
}

}  // namespace

Matrix Gate::matrix() const {
  switch (kind) {
    case GateKind::H: return hadamard();
    case GateKind::X: return pauli_x();
    case GateKind::Y: return pauli_y();
    case GateKind::Z: return pauli_z();
    case GateKind::CNOT: return controlled_block(pauli_x());
    case GateKind::CZ: return controlled_block(pauli_z());
    case GateKind::ControlledU: return controlled_block(Matrix(u));
    case GateKind::SWAP: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      return m;
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.targets != b.targets) return false;
  return a.kind != GateKind::ControlledU || a.u == b.u;
}

Circuit& Circuit::add(Gate g) {
  gates.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits > n_qubits) n_qubits = other.n_qubits;
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  measured.insert(measured.end(), other.measured.begin(), other.measured.end());
  return *this;
}

void Circuit::validate() const {
  for (const Gate& g : gates) {
    if (static_cast<int>(g.targets.size()) != gate_arity(g.kind)) {
      throw std::invalid_argument(std::string(gate_name(g.kind)) + " has wrong target count");
    }
    for (std::size_t i = 0; i < g.targets.size(); ++i) {
      if (g.targets[i] < 0 || g.targets[i] >= n_qubits) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + " target " +
                                    std::to_string(g.targets[i]) + " out of range");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (g.targets[i] == g.targets[j]) {
          throw std::invalid_argument(std::string(gate_name(g.kind)) + " has repeated targets");
        }
      }
    }
  }
  for (int q : measured) {
    if (q < 0 || q >= n_qubits) throw std::invalid_argument("measured qubit out of range");
  }
}

std::vector<Gate> lower(const Gate& g) {
  if (static_cast<int>(g.targets.size()) != gate_arity(g.kind)) {
    throw std::invalid_argument(std::string(gate_name(g.kind)) + " has wrong target count");
  }
  switch (g.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CNOT:
      return {g};
    case GateKind::SWAP: {
      const int a = g.targets[0], b = g.targets[1];
      return {Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)};
    }
    case GateKind::CZ: {
      const int a = g.targets[0], b = g.targets[1];
      return {Gate::h(b), Gate::cnot(a, b), Gate::h(b)};
    }
    case GateKind::ControlledU: {
      const Eigen::Matrix2cd x = pauli_x();
      const Eigen::Matrix2cd z = pauli_z();
      if ((g.u - x).cwiseAbs().maxCoeff() < kAlgebraicTol) {
        return {Gate::cnot(g.targets[0], g.targets[1])};
      }
      if ((g.u - z).cwiseAbs().maxCoeff() < kAlgebraicTol) {
        return lower(Gate::cz(g.targets[0], g.targets[1]));
      }
      throw std::invalid_argument("controlled-U lowering supports only U in {X, Z}");
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

Circuit lower(const Circuit& c) {
  Circuit out(c.n_qubits);
  out.measured = c.measured;
  for (const Gate& g : c.gates) {
    for (Gate& p : lower(g)) out.gates.push_back(std::move(p));
  }
  return out;
}

int quantum_cost(const Circuit& c) {
  int cost = 0;
  for (const Gate& g : c.gates) cost += static_cast<int>(lower(g).size());
  return cost;
}

void simulate_in_place(const Circuit& c, Vector& state) {
  if (state.size() != (Eigen::Index{1} << c.n_qubits)) {
    throw std::invalid_argument("simulate: state dimension does not match circuit width");
  }
  c.validate();
  for (const Gate& g : c.gates) apply_gate(state, g.matrix(), g.targets);
}

void simulate_in_place(const Circuit& c, Matrix& rho) {
  if (rho.rows() != (Eigen::Index{1} << c.n_qubits) || rho.cols() != rho.rows()) {
    throw std::invalid_argument("simulate: density dimension does not match circuit width");
  }
  c.validate();
  for (const Gate& g : c.gates) apply_gate(rho, g.matrix(), g.targets);
}

Vector simulate(const Circuit& c, const Vector& input) {
  Vector state = input;
  simulate_in_place(c, state);
  return state;
}

Matrix unitary_of(const Circuit& c) {
  if (c.n_qubits < 0 || c.n_qubits > 7) throw std::invalid_argument("unitary_of: at most 7 qubits");
  c.validate();
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Vector v = u.col(col);
    for (const Gate& g : c.gates) apply_gate(v, g.matrix(), g.targets);
    u.col(col) = v;
  }
  return u;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_index(std::string_view tok, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad qubit index '" +
                                std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  int declared = -1;
  int max_index = -1;
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
    auto toks = split_ws(line);
    std::string kind(toks[0]);
    std::transform(kind.begin(), kind.end(), kind.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    std::vector<int> qs;
    for (std::size_t i = 1; i < toks.size(); ++i) qs.push_back(parse_index(toks[i], line_no));
    auto need = [&](std::size_t k) {
      if (qs.size() != k) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + kind +
                                    " expects " + std::to_string(k) + " qubit(s)");
      }
    };
    if (kind == "QUBITS") {
      need(1);
      declared = qs[0];
      continue;
    }
    for (int q : qs) max_index = std::max(max_index, q);
    if (kind == "MEASURE") {
      need(1);
      c.measured.push_back(qs[0]);
    } else if (kind == "H" || kind == "X" || kind == "Y" || kind == "Z") {
      need(1);
      const GateKind k = kind == "H" ? GateKind::H
                         : kind == "X" ? GateKind::X
                         : kind == "Y" ? GateKind::Y
                                       : GateKind::Z;
      c.gates.push_back({k, {qs[0]}});
    } else if (kind == "CNOT" || kind == "CX") {
      need(2);
      c.gates.push_back(Gate::cnot(qs[0], qs[1]));
    } else if (kind == "CZ") {
      need(2);
      c.gates.push_back(Gate::cz(qs[0], qs[1]));
    } else if (kind == "SWAP") {
      need(2);
      c.gates.push_back(Gate::swap(qs[0], qs[1]));
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown gate '" +
                                  std::string(toks[0]) + "'");
    }
  }
  c.n_qubits = declared >= 0 ? declared : max_index + 1;
  c.validate();
  return c;
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "QUBITS " << c.n_qubits << "\n";
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::ControlledU) {
      throw std::invalid_argument("controlled-U has no text form");
    }
    out << gate_name(g.kind);
    for (int q : g.targets) out << ' ' << q;
    out << '\n';
  }
  for (int q : c.measured) out << "MEASURE " << q << '\n';
  return out.str();
}

}  // namespace teleportlab
