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

#include "teleportlab/channels.h"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace teleportlab {
namespace {

constexpr std::array kFamilies = {Family::Bell,     Family::GHZ,   Family::Cluster2,
                                  Family::Cluster3, Family::Brown, Family::Borras};

// Equal-magnitude states written as signed basis labels.
Vector signed_kets(std::string_view list, int n) {
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  std::size_t i = 0;
  int count = 0;
  while (i < list.size()) {
    if (list[i] == ' ') {
      ++i;
      continue;
    }
    const double sign = list[i] == '-' ? -1.0 : 1.0;
    ++i;
    const std::string_view bits = list.substr(i, static_cast<std::size_t>(n));
    v += sign * ket(bits);
    i += static_cast<std::size_t>(n);
    ++count;
  }
  return v / std::sqrt(static_cast<double>(count));
}

std::string bit_key(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

const std::map<std::string, std::string_view>& bell_table() {
  static const std::map<std::string, std::string_view> t = {
      {"00", "+00 +11"}, {"01", "+01 +10"}, {"10", "+00 -11"}, {"11", "+01 -10"}};
  return t;
}

const std::map<std::string, std::string_view>& ghz_table() {
  static const std::map<std::string, std::string_view> t = {
      {"000", "+000 +111"}, {"001", "+001 +110"}, {"010", "+010 +101"}, {"011", "+000 -111"},
      {"100", "+011 +100"}, {"101", "+001 -110"}, {"110", "+010 -101"}, {"111", "+011 -100"}};
  return t;
}

const std::map<std::string, std::string_view>& cluster2_table() {
  static const std::map<std::string, std::string_view> t = {
      {"00", "+00 +01 +10 -11"},
      {"01", "+00 -01 +10 +11"},
      {"10", "+00 +01 -10 +11"},
      {"11", "+00 -01 -10 -11"}};
  return t;
}

const std::map<std::string, std::string_view>& cluster3_table() {
  static const std::map<std::string, std::string_view> t = {
      {"000", "+000 +001 +010 -011 +100 +101 -110 +111"},
      {"001", "+000 -001 +010 +011 +100 -101 -110 -111"},
      {"010", "+000 +001 -010 +011 +100 +101 +110 -111"},
      {"011", "+000 -001 -010 -011 +100 -101 +110 +111"},
      {"100", "+000 +001 +010 -011 -100 -101 +110 -111"},
      {"101", "+000 -001 +010 +011 -100 +101 +110 +111"},
      {"110", "+000 +001 -010 +011 -100 -101 -110 +111"},
      {"111", "+000 -001 -010 -011 -100 +101 -110 -111"}};
  return t;
}

constexpr std::string_view kBrown = "+00101 -00110 +01000 -01011 +10001 +10010 +11100 +11111";

constexpr std::string_view kBorras =
    "+000000 +000011 +000101 +000110 +001001 -001010 -001100 +001111 "
    "+010001 +010010 -010100 -010111 +011000 -011011 +011101 -011110 "
    "-100001 +100010 -100100 +100111 -101000 -101011 +101101 +101110 "
    "+110000 -110011 -110101 +110110 +111001 +111010 +111100 +111111";

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Bell: return "bell";
    case Family::GHZ: return "ghz";
    case Family::Cluster2: return "cluster2";
    case Family::Cluster3: return "cluster3";
    case Family::Brown: return "brown";
    case Family::Borras: return "borras";
  }
  throw std::invalid_argument("unknown family");
}

Family parse_family(std::string_view name) {
  for (Family f : kFamilies) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown channel family '" + std::string(name) + "'");
}

int family_bit_count(Family f) {
  switch (f) {
    case Family::Bell:
    case Family::Cluster2:
      return 2;
    case Family::GHZ:
    case Family::Cluster3:
      return 3;
    case Family::Brown:
    case Family::Borras:
      return 0;
  }
  throw std::invalid_argument("unknown family");
}

int family_qubit_count(Family f) {
  switch (f) {
    case Family::Bell:
    case Family::Cluster2:
      return 2;
    case Family::GHZ:
    case Family::Cluster3:
      return 3;
    case Family::Brown:
      return 5;
    case Family::Borras:
      return 6;
  }
  throw std::invalid_argument("unknown family");
}

void ChannelSpec::validate() const {
  if (static_cast<int>(bits.size()) != family_bit_count(family)) {
    throw std::invalid_argument(std::string(family_name(family)) + " takes " +
                                std::to_string(family_bit_count(family)) + " selector bits, got " +
                                std::to_string(bits.size()));
  }
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("selector bits must be 0 or 1");
  }
}

std::string ChannelSpec::bits_string() const { return bit_key(bits); }

std::string ChannelSpec::id() const {
  std::string s(family_name(family));
  if (!bits.empty()) s += "-" + bits_string();
  return s;
}

ChannelSpec make_spec(Family f, std::string_view bits) {
  ChannelSpec spec{f, {}};
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("selector bits must be 0 or 1");
    spec.bits.push_back(c - '0');
  }
  spec.validate();
  return spec;
}

ChannelSpec parse_channel_id(std::string_view id) {
  const auto dash = id.find('-');
  const Family f = parse_family(id.substr(0, dash));
  return make_spec(f, dash == std::string_view::npos ? std::string_view{} : id.substr(dash + 1));
}

Circuit prep_circuit(const ChannelSpec& spec) {
  spec.validate();
  const auto& b = spec.bits;
  Circuit c(family_qubit_count(spec.family));
  switch (spec.family) {
    case Family::Bell:
      if (b[0]) c.add(Gate::x(0));
      if (b[1]) c.add(Gate::x(1));
      c.add(Gate::h(0)).add(Gate::cnot(0, 1));
      break;
    case Family::GHZ: {
      // (relative sign, flip of qubit 1, flip of qubit 2) per selector.
      static const std::map<std::string, std::array<int, 3>> kGhz = {
          {"000", {0, 0, 0}}, {"001", {0, 0, 1}}, {"010", {0, 1, 0}}, {"011", {1, 0, 0}},
          {"100", {0, 1, 1}}, {"101", {1, 0, 1}}, {"110", {1, 1, 0}}, {"111", {1, 1, 1}}};
      const auto& m = kGhz.at(bit_key(b));
      for (int q = 0; q < 3; ++q) {
        if (m[static_cast<std::size_t>(q)]) c.add(Gate::x(q));
      }
      c.add(Gate::h(0)).add(Gate::cnot(0, 1)).add(Gate::cnot(0, 2));
      break;
    }
    case Family::Cluster2:
      for (int q = 0; q < 2; ++q) {
        if (b[static_cast<std::size_t>(q)]) c.add(Gate::x(q));
      }
      c.add(Gate::h(0)).add(Gate::h(1)).add(Gate::cz(0, 1));
      break;
    case Family::Cluster3:
      for (int q = 0; q < 3; ++q) {
        if (b[static_cast<std::size_t>(q)]) c.add(Gate::x(q));
      }
      c.add(Gate::h(0)).add(Gate::h(1)).add(Gate::h(2)).add(Gate::cz(0, 1)).add(Gate::cz(1, 2));
      break;
    case Family::Brown:
      c.add(Gate::h(0)).add(Gate::cnot(0, 4)).add(Gate::h(1)).add(Gate::cnot(1, 2));
      c.add(Gate::cnot(1, 3)).add(Gate::x(3)).add(Gate::x(4)).add(Gate::cnot(4, 2));
      c.add(Gate::swap(3, 4)).add(Gate::h(3)).add(Gate::cnot(3, 4));
      break;
    case Family::Borras:
      c.add(Gate::h(0)).add(Gate::cnot(0, 5)).add(Gate::h(1)).add(Gate::h(3)).add(Gate::h(2));
      c.add(Gate::cz(5, 1)).add(Gate::z(5)).add(Gate::cz(3, 2)).add(Gate::cz(3, 1));
      c.add(Gate::cnot(5, 4)).add(Gate::cnot(3, 5)).add(Gate::cnot(2, 5)).add(Gate::cnot(1, 5));
      c.add(Gate::cnot(2, 4)).add(Gate::h(4)).add(Gate::cnot(4, 5));
      break;
  }
  return c;
}

Vector tabulated_state(const ChannelSpec& spec) {
  spec.validate();
  const int n = family_qubit_count(spec.family);
  const std::string key = bit_key(spec.bits);
  switch (spec.family) {
    case Family::Bell: return signed_kets(bell_table().at(key), n);
    case Family::GHZ: return signed_kets(ghz_table().at(key), n);
    case Family::Cluster2: return signed_kets(cluster2_table().at(key), n);
    case Family::Cluster3: return signed_kets(cluster3_table().at(key), n);
    case Family::Brown: return signed_kets(kBrown, n);
    case Family::Borras: return signed_kets(kBorras, n);
  }
  throw std::invalid_argument("unknown family");
}

ChannelState build_channel(const ChannelSpec& spec) {
  const Circuit prep = prep_circuit(spec);
  Vector state = simulate(prep, basis_state(prep.n_qubits, 0));
  const Vector table = tabulated_state(spec);
  const Complex overlap = table.dot(state);
  if (std::abs(std::abs(overlap) - 1.0) > kAlgebraicTol) {
    throw std::logic_error("preparation of " + spec.id() + " disagrees with its amplitude table");
  }
  state *= std::conj(overlap) / std::abs(overlap);
  if ((state - table).cwiseAbs().maxCoeff() > kAlgebraicTol) {
    throw std::logic_error("preparation of " + spec.id() + " disagrees with its amplitude table");
  }
  return {spec, std::move(state), prep.n_qubits};
}

std::vector<ChannelSpec> enumerate_variants() {
  std::vector<ChannelSpec> out;
  for (Family f : kFamilies) {
    const int k = family_bit_count(f);
    for (int v = 0; v < (1 << k); ++v) {
      ChannelSpec spec{f, {}};
      for (int j = k - 1; j >= 0; --j) spec.bits.push_back((v >> j) & 1);
      out.push_back(std::move(spec));
    }
  }
  return out;
}

std::vector<ChannelSpec> select_variants(std::string_view selector) {
  std::vector<ChannelSpec> out;
  const auto all = enumerate_variants();
  std::size_t pos = 0;
  while (pos <= selector.size()) {
    std::size_t end = selector.find(',', pos);
    if (end == std::string_view::npos) end = selector.size();
    const std::string_view item = selector.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(out.end(), all.begin(), all.end());
    } else if (item.find('-') == std::string_view::npos) {
      const Family f = parse_family(item);
      for (const auto& s : all) {
        if (s.family == f) out.push_back(s);
      }
    } else {
      out.push_back(parse_channel_id(item));
    }
  }
  if (out.empty()) throw std::invalid_argument("selector matches no channel");
  return out;
}

}  // namespace teleportlab
