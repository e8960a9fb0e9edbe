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

#include "teleportlab/reference_forms.h"

#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace teleportlab {
namespace {

// Published closed forms, transcribed as printed. Kets with the wrong
// number of symbols, sign slips and missing terms are kept on purpose; the
// comparison against the regenerated forms reports them.
constexpr std::string_view kForms = R"forms(
form bell bit-flip 1/2
  s4+t4 | +00 +11 | +00 +11
form bell phase-flip 1/2
  s4+t4 | +00 +11 | +00 +11
form bell bit-phase-flip 1/2
  s4 | +00 +11 | +00 +11
  t4 | +00 -11 | +00 -11
form bell amplitude-damping 1/2
  1 | +00 +(s2)11 | +00 +(s2)11
  t4 | +00 | +00
form bell phase-damping 1/2
  s4 | +00 +11 | +00 +11
  t4 | +00 | +00
  t4 | +11 | +11
form bell depolarizing 1/2
  s4+1/3t4 | +00 +11 | +00 +11
form ghz bit-flip 1/2
  s6+t6 | +000 +111 | +000 +111
form ghz phase-flip 1/2
  s6 | +000 +111 | +000 +111
  t6 | +00 -11 | +00 -11
form ghz bit-phase-flip 1/2
  s6 | +000 +111 | +000 +111
  -t6 | +111 -000 | +111 -000
form ghz amplitude-damping 1/2
  1 | +000 +(s3)111 | +000 +(s3)111
  t6 | +000 | +000
form ghz phase-damping 1/2
  s6 | +000 +111 | +000 +111
  t6 | +000 | +000
  t6 | +111 | +111
form ghz depolarizing 1/2
  s6+1/27t6+1/27it6 | +000 +111 | +000 +111
  1/27t6 | +000 -111 | +000 -111
form cluster2 bit-flip 1/4
  s4 | +00 +01 +10 -11 | +00 +01 +10 -11
  t4 | +11 +01 +10 -00 | +11 +01 +10 -00
form cluster2 phase-flip 1/4
  s4 | +00 +01 +10 -11 | +00 +01 +10 -11
  t4 | +00 -01 -10 -11 | +00 -01 -10 -11
form cluster2 bit-phase-flip 1/4
  s4 | +00 +01 +10 -11 | +00 +01 +10 -11
  t4 | +11 -01 -10 -00 | +11 -01 -10 -00
form cluster2 amplitude-damping 1/4
  1 | +00 +(s1)01 +(s1)10 -(s1)11 | +00 +(s1)01 +(s1)10 -(s1)11
  t4 | +00 | +00
form cluster2 phase-damping 1/4
  s4 | +00 +01 +10 -11 | +00 +01 +10 -11
form cluster2 depolarizing 1/4
  s4 | +00 +01 +10 -11 | +00 +01 +10 -11
  2/9t4 | +11 +10 +01 -00 | +11 +10 +01 -00
  1/9t4 | +00 -01 -10 -11 | +00 -01 -10 -11
form cluster3 bit-flip 1/8
  s6 | +000 +001 +010 -011 +100 +101 -110 +111 | +000 +001 +010 -011 +100 +101 -110 +111
  t6 | +111 +110 +101 -100 +011 +010 -001 +000 | +111 +110 +101 -100 +011 +010 -001 +000
form cluster3 phase-flip 1/8
  s6 | +000 +001 +010 -011 +100 +101 -110 +111 | +000 +001 +010 -011 +100 +101 -110 +111
  t6 | +000 -001 -010 -011 -100 +101 -110 -111 | +000 -001 -010 -011 -100 +101 -110 -111
form cluster3 bit-phase-flip 1/8
  s6 | +000 +001 +010 -011 +100 +101 -110 +111 | +000 +001 +010 -011 +100 +101 -110 +111
  -it6 | +111 -110 -101 -100 -011 +010 -001 -000 | +111 -110 -101 -100 -011 +010 -001 -000
form cluster3 amplitude-damping 1/8
  1 | +000 +(s1)001 +(s1)010 -(s1)100 +(s4)011 +(s4)101 -(s4)110 +(s3)111 | +000 +(s1)001 +(s1)010 -(s1)100 +(s4)011 +(s4)101 -(s4)110 +(s3)111
  t6 | +000 | +000
form cluster3 phase-damping 1/8
  s6 | +000 +001 +010 -011 +100 +101 -110 +111 | +000 +001 +010 -011 +100 +101 -110 +111
  t6 | +000 | +000
  t6 | +111 | +111
form cluster3 depolarizing 1/8
  s6 | +@ | +@
  1/27t6 | +111 +110 +101 -100 +011 +010 -001 +000 | +111 +110 +101 -100 +011 +010 -001 +000
  -1/27t6 | +111 -110 -101 -100 -011 +010 -001 -000 | +111 -110 -101 -100 -011 +010 -001 -000
  1/27t6 | +000 -001 -010 -011 -100 +101 -110 -111 | +000 -001 -010 -011 -100 +101 -110 -111
form brown bit-flip 1/8
  s10 | -00101 +00111 +01000 -01010 +10001 +10011 +11100 +11110 | -00101 +00111 +01000 -01010 +10001 +10011 +11100 +11110
  t10 | -11010 +11000 +101111 -10101 +01110 +01100 +00011 +00001 | -11010 +11000 +101111 -10101 +01110 +01100 +00011 +00001
form brown phase-flip 1/2
  s10 | -00101 +00111 +01000 -01010 +10001 +10011 +11100 +11110 | -00101 +00111 +01000 -01010 +10001 +10011 +11100 +11110
  t10 | -00101 -00111 -01000 -01010 +10001 -10011 -11100 +11110 | -00101 -00111 -01000 -01010 +10001 -10011 -11100 +11110
form brown bit-phase-flip 1/8
  s10 | -00101 +00111 +01000 -01010 +10001 +10011 +11100 +11110 | -00101 +00111 +01000 -01010 +10001 +10011 +11100 +11110
  it10 | -11010 -11000 -101111 -10101 +01110 -01100 -00011 +00001 | -11010 -11000 -10111 -10101 +01110 -01100 -00011 +00001
form brown amplitude-damping 1/8
  1 | +(s1)01000 -(s2)00101 +(s2)10001 -(s2)01010 +(s3)00111 +(s3)10011 +(s3)11100 +(s4)11110 | +(s1)01000 -(s2)00101 +(s2)10001 -(s2)01010 +(s3)00111 +(s3)10011 +(s3)11100 +(s4)11110
form brown phase-damping 1/8
  s10 | -00101 +00111 +01000 -01010 +10001 +10011 +11100 +11110 | -00101 +00111 +01000 -01010 +10001 +10011 +11100 +11110
form brown depolarizing 1/8
  s10 | +@ | +@
  1/243t10 | -11010 +11000 +101111 -10101 +01110 +01100 +00011 +00001 | -11010 +11000 +101111 -10101 +01110 +01100 +00011 +00001
  1/243t10 | -00101 -00111 -01000 -01010 +10001 -10011 -11100 +11110 | -00101 -00111 -01000 -01010 +10001 -10011 -11100 +11110
  -1/243t10 | -11010 -11000 -101111 -10101 +01110 -01100 -00011 +00001 | -11010 -11000 -10111 -10101 +01110 -01100 -00011 +00001
form borras bit-flip 1/32
  s12 | +@ | +@
  t12 | +111111 +000000 +111100 +000011 +111010 +000101 +111001 +000110 +110110 +001001 +110000 +001111 +101110 +010001 +101010 +010010 +100111 +011000 +100010 +011101 -110101 -001010 -110011 -001100 -101011 -010100 -101000 -010111 -100100 -011011 -100001 -011110 | +111111 +000000 +111100 +000011 +111010 +000101 +111001 +000110 +110110 +001001 +110000 +001111 +101110 +010001 +101010 +010010 +100111 +011000 +100010 +011101 -110101 -001010 -110011 -001100 -101011 -010100 -101000 -010111 -100100 -011011 -100001 -011110
form borras phase-flip 1/32
  s12 | +@ | +@
  t12 | +000000 +111111 +000011 +111100 +000101 +111010 +000110 +111001 +001001 +110110 +001111 +110000 +010001 +101110 +010010 +101101 +011000 +100111 +011101 +100010 -001010 -110101 -001100 -110011 -010100 -101011 -010111 -101000 -011011 -100100 -011110 -100001 | +000000 +111111 +000011 +111100 +000101 +111010 +000110 +111001 +001001 +110110 +001111 +110000 +010001 +101110 +010010 +101101 +011000 +100111 +011101 +100010 +001010 -110101 -001100 -110011 -010100 -101011 -010111 -101000 -011011 -100100 -011110 -100001
form borras bit-phase-flip 1/32
  s12 | +@ | +@
  t12 | +111111 +000000 +111100 +000011 +111010 +000101 +111001 +000110 +110110 +001001 +110000 +001111 +101110 +010001 +101101 +010010 +100111 +011000 +100010 +011101 -110101 -001010 -110011 -001100 -101011 -010100 -101000 -010111 -100100 -011011 -100001 -011110 | +111111 +000000 +111100 +000011 +111010 +000101 +111001 +000110 +110110 +001001 +110000 +001111 +101110 +010001 +101101 +010010 +100111 +011000 +100010 +011101 -110101 -001010 -110011 -001100 -101011 -010100 -101000 -010111 -100100 -011011 -100001 -011110
form borras amplitude-damping 1/32
  1 | +000000 +(s6)111111 +(s2)000011 +(s2)000101 +(s2)000110 +(s2)001001 +(s2)010001 +(s2)110000 +(s2)010010 +(s2)011000 +(s2)100010 -(s2)001010 -(s2)001100 -(s2)010100 -(s2)101000 -(s2)100100 -(s2)100001 +(s4)111100 +(s4)111010 +(s4)111001 +(s4)110110 +(s4)001111 +(s4)101110 +(s4)101101 +(s4)100111 +(s4)011101 +(s4)110101 -(s4)110011 -(s4)101011 +(s4)010111 -(s4)011011 -(s4)011110 | +000000 +(s6)111111 +(s2)000011 +(s2)000101 +(s2)000110 +(s2)001001 +(s2)010001 +(s2)110000 +(s2)010010 +(s2)011000 +(s2)100010 -(s2)001010 -(s2)001100 -(s2)010100 -(s2)101000 -(s2)100100 -(s2)100001 +(s4)111100 +(s4)111010 +(s4)111001 +(s4)110110 +(s4)001111 +(s4)101110 +(s4)101101 +(s4)100111 +(s4)011101 +(s4)110101 -(s4)110011 -(s4)101011 +(s4)010111 -(s4)011011 -(s4)011110
  t12 | +000000 | +000000
form borras phase-damping 1/32
  s12 | +000000 +111111 +000011 +000101 +000110 +001001 +010001 +110000 +010010 +011000 +100010 -001010 -001100 -010100 -101000 -100100 -100001 +111100 +111010 +111001 +110110 +001111 +101110 +101101 +100111 +011101 +110101 -110011 -101011 +010111 -011011 -011110 | +000000 +111111 +000011 +000101 +000110 +001001 +010001 +110000 +010010 +011000 +100010 -001010 -001100 -010100 -101000 -100100 +100001 +111100 +111010 +111001 +110110 +001111 +101110 +101101 +100111 +011101 +110101 -110011 -101011 +010111 -011011 -011110
  t12 | +000000 | +000000
  t12 | +111111 | +111111
form borras depolarizing 1/32
  1 | +@ | +@
  1/729t12 | +111111 +000000 +111100 +000011 +111010 +000101 +111001 +000110 +110110 +001001 +110000 +001111 +101110 +010001 +101010 +010010 +100111 +011000 +100010 +011101 -110101 -001010 -110011 -001100 -101011 -010100 -101000 -010111 -100100 -011011 -100001 -011110 | +111111 +000000 +111100 +000011 +111010 +000101 +111001 +000110 +110110 +001001 +110000 +001111 +101110 +010001 +101010 +010010 +100111 +011000 +100010 +011101 -1100101 -001010 -110011 -001100 -101011 -010100 -101000 -010111 -100100 -011011 -100001 -011110
  1/729t12 | +111111 +000000 +111100 +000011 +111010 +000101 +111001 +000110 +110110 +001001 +110000 +001111 +101110 +010001 +101101 +010010 +100111 +011000 +100010 +011101 -110101 -001010 -110011 -001100 -101011 -010100 -101000 -010111 -100100 -011011 -100001 -011110 | +111111 +000000 +111100 +000011 +111010 +000101 +111001 +000110 +110110 +001001 +110000 +001111 +101110 +010001 +101101 +010010 +100111 +011000 +100010 +011101 -110101 -001010 -110011 -001100 -101011 -010100 -101000 -010111 -100100 -011011 -100001 -011110
  1/729t12 | +000000 +111111 +000011 +111100 +000101 +111010 +000110 +111001 +001001 +110110 +001111 +110000 +010001 +101110 +010010 +101101 +011000 +100111 +011101 +100010 +010010 -110101 -001100 -110011 -010100 -101011 -010111 -101000 -011011 -100100 -011110 -100001 | +000000 +111111 +000011 +111100 +000101 +111010 +000110 +111001 +001001 +110110 +001111 +110000 +010001 +101110 +010010 +101101 +011000 +100111 +011101 +100010 +001010 -110101 -001100 -110011 -010100 -101011 -010111 -101000 -011011 -100100 -011110 -100001
)forms";

constexpr std::array kProbeEtas = {0.1, 0.3, 0.5, 0.9};

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("reference forms line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) return out;
    pos = end + 1;
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  for (std::string_view tok : split(s, ' ')) {
    if (!trim(tok).empty()) out.push_back(trim(tok));
  }
  return out;
}

bool take_int(std::string_view s, std::size_t& i, long& value) {
  const std::size_t start = i;
  value = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    value = value * 10 + (s[i] - '0');
    ++i;
  }
  return i > start;
}

// Monomials "[num[/num]][i][s<k>][t<k>]" joined by + and -.
Poly parse_poly(std::string_view text, int line) {
  text = trim(text);
  if (text.empty()) fail(line, "empty coefficient");
  Poly out;
  std::size_t i = 0;
  while (i < text.size()) {
    double sign = 1.0;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1.0 : 1.0;
      ++i;
    } else if (i != 0) {
      fail(line, "expected + or - in '" + std::string(text) + "'");
    }
    const std::size_t start = i;
    double mag = 1.0;
    long num = 0, den = 0;
    if (take_int(text, i, num)) {
      mag = static_cast<double>(num);
      if (i < text.size() && text[i] == '/') {
        ++i;
        if (!take_int(text, i, den) || den == 0) fail(line, "bad fraction");
        mag /= static_cast<double>(den);
      }
    }
    Complex c = sign * mag;
    if (i < text.size() && text[i] == 'i') {
      c *= Complex(0.0, 1.0);
      ++i;
    }
    long sp = 0, tp = 0;
    if (i < text.size() && text[i] == 's') {
      ++i;
      if (!take_int(text, i, sp)) fail(line, "s needs a power");
    }
    if (i < text.size() && text[i] == 't') {
      ++i;
      if (!take_int(text, i, tp)) fail(line, "t needs a power");
    }
    if (i == start) fail(line, "bad monomial in '" + std::string(text) + "'");
    out += Poly::monomial(c, static_cast<int>(sp), static_cast<int>(tp));
  }
  return out;
}

SparseKet sign_pattern(Family family) {
  const ChannelSpec spec{family, std::vector<int>(static_cast<std::size_t>(family_bit_count(family)), 0)};
  const Vector state = tabulated_state(spec);
  const double peak = state.cwiseAbs().maxCoeff();
  SparseKet out;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    if (std::abs(state(i)) > 0.5 * peak) {
      out[static_cast<std::uint64_t>(i)] = Poly::constant(state(i).real() / peak);
    }
  }
  return out;
}

SparseKet parse_kets(std::string_view text, const ReferenceForm& form,
                     std::vector<std::string>& notes, int line) {
  SparseKet out;
  for (std::string_view tok : split_ws(text)) {
    if (tok.front() != '+' && tok.front() != '-') fail(line, "ket needs a sign: " + std::string(tok));
    Poly amp = Poly::constant(tok.front() == '-' ? -1.0 : 1.0);
    tok.remove_prefix(1);
    if (!tok.empty() && tok.front() == '(') {
      const std::size_t close = tok.find(')');
      if (close == std::string_view::npos) fail(line, "unclosed amplitude");
      amp = amp * parse_poly(tok.substr(1, close - 1), line);
      tok.remove_prefix(close + 1);
    }
    if (tok == "@") {
      for (const auto& [index, sign] : sign_pattern(form.family)) out[index] += amp * sign;
      continue;
    }
    if (tok.empty() || tok.find_first_not_of("01") != std::string_view::npos) {
      fail(line, "bad ket label '" + std::string(tok) + "'");
    }
    if (static_cast<int>(tok.size()) != form.n_qubits) {
      notes.push_back("ket |" + std::string(tok) + "> has " + std::to_string(tok.size()) +
                      " symbols on a " + std::to_string(form.n_qubits) + "-qubit channel; dropped");
      continue;
    }
    out[std::stoull(std::string(tok), nullptr, 2)] += amp;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Vector dense(const SparseKet& k, int n, double eta) {
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  for (const auto& [index, amp] : k) v(static_cast<Eigen::Index>(index)) = amp.eval(eta);
  return v;
}

ChannelSpec first_variant(Family family) {
  return {family, std::vector<int>(static_cast<std::size_t>(family_bit_count(family)), 0)};
}

}  // namespace

std::string ReferenceForm::key() const {
  return std::string(family_name(family)) + "/" + std::string(noise_name(kind));
}

Matrix ReferenceForm::evaluate(double eta) const {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix rho = Matrix::Zero(dim, dim);
  for (const FormTerm& t : terms) {
    rho.noalias() += t.coefficient.eval(eta) * dense(t.ket, n_qubits, eta) *
                     dense(t.bra, n_qubits, eta).transpose();
  }
  return scale * rho;
}

std::vector<ReferenceForm> parse_reference_forms(std::string_view text) {
  std::vector<ReferenceForm> out;
  int line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, 5) == "form ") {
      const auto head = split_ws(line.substr(5));
      if (head.size() != 3) fail(line_no, "form header needs family, noise and scale");
      ReferenceForm f;
      f.family = parse_family(head[0]);
      f.kind = parse_noise(head[1]);
      f.n_qubits = family_qubit_count(f.family);
      const Poly scale = parse_poly(head[2], line_no);
      f.scale = scale.eval(0.0).real();
      out.push_back(std::move(f));
      continue;
    }
    if (out.empty()) fail(line_no, "term outside a form");
    const auto parts = split(line, '|');
    if (parts.size() != 3) fail(line_no, "term needs coefficient | kets | bras");
    ReferenceForm& f = out.back();
    FormTerm term;
    term.coefficient = parse_poly(parts[0], line_no);
    term.ket = parse_kets(parts[1], f, f.notes, line_no);
    term.bra = parse_kets(parts[2], f, f.notes, line_no);
    f.terms.push_back(std::move(term));
  }
  return out;
}

const std::vector<ReferenceForm>& reference_forms() {
  static const std::vector<ReferenceForm> forms = parse_reference_forms(kForms);
  return forms;
}

const ReferenceForm& reference_form(Family family, NoiseKind kind) {
  for (const ReferenceForm& f : reference_forms()) {
    if (f.family == family && f.kind == kind) return f;
  }
  throw std::invalid_argument("no closed form for " + std::string(family_name(family)) + "/" +
                              std::string(noise_name(kind)));
}

FormComparison compare_reference_form(const ReferenceForm& form) {
  const SymbolicEnsemble regen = regenerated_form(first_variant(form.family), form.kind);
  FormComparison c{form.key(), false, 0.0, 0.0, form.notes};
  for (double eta : kProbeEtas) {
    const double d = max_abs_diff(form.evaluate(eta), regen.evaluate(eta));
    if (d > c.max_diff) {
      c.max_diff = d;
      c.worst_eta = eta;
    }
  }
  c.matches = c.max_diff <= kAlgebraicTol;
  return c;
}

std::vector<FormComparison> compare_all_reference_forms() {
  std::vector<FormComparison> out;
  for (const ReferenceForm& f : reference_forms()) out.push_back(compare_reference_form(f));
  return out;
}

Matrix closed_form_density(const ChannelSpec& spec, NoiseKind kind, double eta) {
  spec.validate();
  if (spec != first_variant(spec.family)) {
    throw std::invalid_argument("closed forms exist only for the all-zero variant, not " +
                                spec.id());
  }
  NoiseModel{kind, eta}.validate();
  static const std::vector<FormComparison> verdicts = compare_all_reference_forms();
  const ReferenceForm& form = reference_form(spec.family, kind);
  for (const FormComparison& v : verdicts) {
    if (v.key == form.key() && v.matches) return form.evaluate(eta);
  }
  return regenerated_form(spec, kind).evaluate(eta);
}

}  // namespace teleportlab
