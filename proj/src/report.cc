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

#include "teleportlab/report.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <iomanip>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "teleportlab/circuit.h"
#include "teleportlab/fixtures.h"

namespace teleportlab {
namespace {

std::string fixed(double v, int digits) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, digits);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

double parse_double(std::string_view s, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("csv line " + std::to_string(line) + ": bad number '" +
                                std::string(s) + "'");
  }
  return v;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string_view noise_color(NoiseKind k) {
  switch (k) {
    case NoiseKind::BitFlip: return "#1f77b4";
    case NoiseKind::PhaseFlip: return "#d62728";
    case NoiseKind::BitPhaseFlip: return "#2ca02c";
    case NoiseKind::AmplitudeDamping: return "#9467bd";
    case NoiseKind::PhaseDamping: return "#ff7f0e";
    case NoiseKind::Depolarizing: return "#17becf";
  }
  return "#000000";
}

std::string row_channel_id(const SweepRow& r) {
  return r.family_bits.empty() ? r.channel : r.channel + "-" + r.family_bits;
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 12);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

void write_csv(std::ostream& out, const SweepResult& rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.channel << ',' << r.family_bits << ',' << noise_name(r.noise) << ','
        << application_name(r.mode) << ',' << format_number(r.eta) << ','
        << format_number(r.theta) << ',' << format_number(r.phi) << ','
        << format_number(r.fidelity) << '\n';
  }
}

std::string to_csv(const SweepResult& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

SweepResult parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("csv: missing or unexpected header");
  }
  SweepResult rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    for (std::size_t comma; (comma = rest.find(',')) != std::string_view::npos;) {
      f.push_back(rest.substr(0, comma));
      rest.remove_prefix(comma + 1);
    }
    f.push_back(rest);
    if (f.size() != 8) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 8 fields");
    }
    SweepRow r;
    r.channel = std::string(f[0]);
    r.family_bits = std::string(f[1]);
    r.noise = parse_noise(f[2]);
    r.mode = parse_application(f[3]);
    r.eta = parse_double(f[4], line_no);
    r.theta = parse_double(f[5], line_no);
    r.phi = parse_double(f[6], line_no);
    r.fidelity = parse_double(f[7], line_no);
    rows.push_back(std::move(r));
  }
  return rows;
}

SweepResult parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_csv(in);
}

std::string render_svg(const SweepResult& rows, std::string_view channel_id,
                       std::string_view title) {
  constexpr double kWidth = 640, kHeight = 440;
  constexpr double kLeft = 60, kRight = 170, kTop = 40, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double eta) { return fixed(kLeft + eta * plot_w, 2); };
  auto py = [&](double f) { return fixed(kTop + (1.0 - f) * plot_h, 2); };

  // noise -> eta -> (sum, count), in first-seen order.
  std::vector<NoiseKind> order;
  std::map<NoiseKind, std::map<double, std::pair<double, int>>> curves;
  for (const SweepRow& r : rows) {
    if (row_channel_id(r) != channel_id) continue;
    if (!curves.count(r.noise)) order.push_back(r.noise);
    auto& cell = curves[r.noise][r.eta];
    cell.first += r.fidelity;
    cell.second += 1;
  }
  if (order.empty()) {
    throw std::invalid_argument("no sweep rows for channel '" + std::string(channel_id) + "'");
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << px(0.5) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " font-size=\"15\">" << xml_escape(title) << "</text>\n"
      << "<rect x=\"" << px(0) << "\" y=\"" << py(1) << "\" width=\"" << fixed(plot_w, 2)
      << "\" height=\"" << fixed(plot_h, 2) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    out << "<line x1=\"" << px(v) << "\" y1=\"" << py(0) << "\" x2=\"" << px(v) << "\" y2=\""
        << fixed(kTop + plot_h + 5, 2) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << px(v) << "\" y=\"" << fixed(kTop + plot_h + 20, 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fixed(v, 1)
        << "</text>\n"
        << "<line x1=\"" << fixed(kLeft - 5, 2) << "\" y1=\"" << py(v) << "\" x2=\"" << px(0)
        << "\" y2=\"" << py(v) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fixed(kLeft - 8, 2) << "\" y=\"" << py(v)
        << "\" text-anchor=\"end\" dominant-baseline=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"11\">" << fixed(v, 1) << "</text>\n";
  }
  out << "<text x=\"" << px(0.5) << "\" y=\"" << fixed(kHeight - 10, 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">eta</text>\n"
      << "<text x=\"16\" y=\"" << py(0.5) << "\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " font-size=\"13\" transform=\"rotate(-90 16 " << py(0.5) << ")\">fidelity</text>\n";

  int slot = 0;
  for (NoiseKind k : order) {
    out << "<polyline fill=\"none\" stroke=\"" << noise_color(k)
        << "\" stroke-width=\"1.5\" data-noise=\"" << noise_name(k) << "\" points=\"";
    bool first = true;
    for (const auto& [eta, cell] : curves[k]) {
      const double f = std::clamp(cell.first / cell.second, 0.0, 1.0);
      out << (first ? "" : " ") << px(eta) << ',' << py(f);
      first = false;
    }
    out << "\"/>\n";
    const double ly = kTop + 10 + 20.0 * slot++;
    out << "<line x1=\"" << fixed(kLeft + plot_w + 15, 2) << "\" y1=\"" << fixed(ly, 2)
        << "\" x2=\"" << fixed(kLeft + plot_w + 40, 2) << "\" y2=\"" << fixed(ly, 2)
        << "\" stroke=\"" << noise_color(k) << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fixed(kLeft + plot_w + 46, 2) << "\" y=\"" << fixed(ly, 2)
        << "\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << noise_name(k) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

CostReport cost_report(const std::vector<ChannelSpec>& specs) {
  CostReport report;
  for (const ChannelSpec& spec : specs) {
    CostRow row{spec,
                quantum_cost(prep_circuit(spec)),
                quantum_cost(protocol_circuit(spec)),
                quantum_cost(correction_circuit(spec)),
                0,
                published_cost(spec)};
    row.derived = row.prep + row.protocol + row.correction;
    report.rows.push_back(std::move(row));
  }
  for (const CostRow& row : report.rows) {
    auto it = std::find_if(report.families.begin(), report.families.end(),
                           [&](const FamilyCost& f) { return f.family == row.spec.family; });
    if (it == report.families.end()) {
      report.families.push_back({row.spec.family, 0, 0.0, 0.0});
      it = std::prev(report.families.end());
    }
    it->variants += 1;
    it->derived_average += row.derived;
    if (it->published_average && row.published) {
      *it->published_average += *row.published;
    } else {
      it->published_average.reset();
    }
  }
  for (FamilyCost& f : report.families) {
    f.derived_average /= f.variants;
    if (f.published_average) *f.published_average /= f.variants;
  }
  return report;
}

std::string format_cost_report(const CostReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "channel" << std::right << std::setw(6) << "prep"
      << std::setw(10) << "protocol" << std::setw(12) << "correction" << std::setw(9)
      << "derived" << std::setw(11) << "published" << std::setw(7) << "delta" << '\n';
  for (const CostRow& r : report.rows) {
    out << std::left << std::setw(12) << r.spec.id() << std::right << std::setw(6) << r.prep
        << std::setw(10) << r.protocol << std::setw(12) << r.correction << std::setw(9)
        << r.derived;
    if (r.published) {
      const int delta = r.derived - *r.published;
      out << std::setw(11) << *r.published << std::setw(7)
          << (delta > 0 ? "+" + std::to_string(delta) : std::to_string(delta));
    } else {
      out << std::setw(11) << "-" << std::setw(7) << "-";
    }
    out << '\n';
  }
  out << "\nfamily averages\n";
  for (const FamilyCost& f : report.families) {
    out << std::left << std::setw(12) << family_name(f.family) << std::right
        << " derived " << format_number(f.derived_average) << "  published "
        << (f.published_average ? format_number(*f.published_average) : std::string("-"))
        << "  (" << f.variants << " variant" << (f.variants == 1 ? "" : "s") << ")\n";
  }
  return out.str();
}

nlohmann::json cost_report_json(const CostReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CostRow& r : report.rows) {
    nlohmann::json j = {{"channel", r.spec.id()},       {"prep", r.prep},
                        {"protocol", r.protocol},       {"correction", r.correction},
                        {"derived", r.derived}};
    j["published"] = r.published ? nlohmann::json(*r.published) : nlohmann::json(nullptr);
    j["delta"] = r.published ? nlohmann::json(r.derived - *r.published) : nlohmann::json(nullptr);
    rows.push_back(std::move(j));
  }
  nlohmann::json families = nlohmann::json::array();
  for (const FamilyCost& f : report.families) {
    families.push_back({{"family", family_name(f.family)},
                        {"variants", f.variants},
                        {"derived_average", f.derived_average},
                        {"published_average", f.published_average
                                                  ? nlohmann::json(*f.published_average)
                                                  : nlohmann::json(nullptr)}});
  }
  return {{"rows", rows}, {"families", families}};
}

int VerifyReport::unexplained_table_deltas() const {
  int n = 0;
  for (const TableCheck& t : tables) {
    for (const std::string& reason : t.reasons) n += reason.empty() ? 1 : 0;
  }
  return n;
}

int VerifyReport::unexplained_form_deltas() const {
  int n = 0;
  for (const FormComparison& f : forms) {
    if (!f.matches && !known_form_deltas().count(f.key)) ++n;
  }
  return n;
}

VerifyReport verify_tables() {
  VerifyReport report;
  for (const CorrectionFixture& fixture : correction_fixtures()) {
    for (const auto& [bits, published] : fixture.columns) {
      const ChannelSpec spec = make_spec(fixture.family, bits);
      const CorrectionTable derived = derive_corrections(spec);
      TableCheck check;
      check.fixture_id = fixture.id;
      check.channel = spec.id();
      check.deltas = compare_tables(derived, published);
      std::map<std::string, int> keys;
      for (const auto& [k, v] : derived) keys[k] = 1;
      for (const auto& [k, v] : published) keys[k] = 1;
      check.rows = static_cast<int>(keys.size());
      check.matched = check.rows - static_cast<int>(check.deltas.size());
      for (const TableDelta& d : check.deltas) {
        const KnownDelta* known = find_known_delta(check.channel, d);
        check.reasons.push_back(known ? known->reason : std::string());
      }
      report.tables.push_back(std::move(check));
    }
  }
  report.forms = compare_all_reference_forms();
  return report;
}

std::string format_verify_report(const VerifyReport& report) {
  std::ostringstream out;
  int table_deltas = 0, form_deltas = 0;
  for (const TableCheck& t : report.tables) {
    out << t.fixture_id << ' ' << t.channel << ": " << t.matched << '/' << t.rows
        << " rows match\n";
    for (std::size_t i = 0; i < t.deltas.size(); ++i) {
      const TableDelta& d = t.deltas[i];
      ++table_deltas;
      out << "  outcome " << d.outcome << ": derived " << d.derived << ", published "
          << d.expected;
      if (t.reasons[i].empty()) {
        out << "  [UNEXPLAINED]\n";
      } else {
        out << "  [known: " << t.reasons[i] << "]\n";
      }
    }
  }
  out << "\nclosed forms (transcription vs. regenerated)\n";
  for (const FormComparison& f : report.forms) {
    if (f.matches) {
      out << "  " << f.key << ": matches\n";
    } else {
      ++form_deltas;
      out << "  " << f.key << ": differs, max " << format_number(f.max_diff) << " at eta "
          << format_number(f.worst_eta);
      if (auto it = known_form_deltas().find(f.key); it != known_form_deltas().end()) {
        out << "  [known: " << it->second << "]\n";
      } else {
        out << "  [UNEXPLAINED]\n";
      }
    }
    for (const std::string& note : f.notes) out << "    note: " << note << '\n';
  }
  out << "\nsummary: " << table_deltas << " table deltas (" << report.unexplained_table_deltas()
      << " unexplained), " << form_deltas << " closed-form deltas ("
      << report.unexplained_form_deltas() << " unexplained)\n";
  return out.str();
}

nlohmann::json verify_report_json(const VerifyReport& report) {
  nlohmann::json tables = nlohmann::json::array();
  for (const TableCheck& t : report.tables) {
    nlohmann::json deltas = nlohmann::json::array();
    for (std::size_t i = 0; i < t.deltas.size(); ++i) {
      deltas.push_back({{"outcome", t.deltas[i].outcome},
                        {"derived", t.deltas[i].derived},
                        {"published", t.deltas[i].expected},
                        {"known", !t.reasons[i].empty()},
                        {"reason", t.reasons[i]}});
    }
    tables.push_back({{"fixture", t.fixture_id},
                      {"channel", t.channel},
                      {"rows", t.rows},
                      {"matched", t.matched},
                      {"deltas", deltas}});
  }
  nlohmann::json forms = nlohmann::json::array();
  for (const FormComparison& f : report.forms) {
    const auto known = known_form_deltas().find(f.key);
    forms.push_back({{"form", f.key},
                     {"matches", f.matches},
                     {"max_diff", f.max_diff},
                     {"worst_eta", f.worst_eta},
                     {"known", known != known_form_deltas().end()},
                     {"reason", known != known_form_deltas().end() ? known->second : ""},
                     {"notes", f.notes}});
  }
  return {{"tables", tables}, {"forms", forms}, {"ok", report.ok()}};
}

nlohmann::json channel_json(const ChannelState& channel) {
  nlohmann::json amps = nlohmann::json::array();
  for (Eigen::Index i = 0; i < channel.state.size(); ++i) {
    const Complex a = channel.state(i);
    if (std::abs(a) < kAlgebraicTol) continue;
    std::string basis(static_cast<std::size_t>(channel.n_qubits), '0');
    for (int q = 0; q < channel.n_qubits; ++q) {
      if ((i >> (channel.n_qubits - 1 - q)) & 1) basis[static_cast<std::size_t>(q)] = '1';
    }
    amps.push_back({{"basis", basis}, {"re", a.real()}, {"im", a.imag()}});
  }
  const Circuit prep = prep_circuit(channel.spec);
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : prep.gates) {
    std::string s(gate_name(g.kind));
    for (int q : g.targets) s += " " + std::to_string(q);
    gates.push_back(s);
  }
  return {{"id", channel.spec.id()},
          {"family", family_name(channel.spec.family)},
          {"bits", channel.spec.bits_string()},
          {"n_qubits", channel.n_qubits},
          {"amplitudes", amps},
          {"prep", gates},
          {"prep_cost", quantum_cost(prep)}};
}

nlohmann::json run_json(const ProtocolRun& r) {
  nlohmann::json rho = nlohmann::json::array();
  for (Eigen::Index i = 0; i < r.rho_out.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < r.rho_out.cols(); ++j) {
      row.push_back({r.rho_out(i, j).real(), r.rho_out(i, j).imag()});
    }
    rho.push_back(row);
  }
  nlohmann::json corrections = nlohmann::json::object();
  for (const auto& [outcome, p] : derive_corrections(r.spec)) {
    corrections[outcome] = pauli_name(p);
  }
  nlohmann::json branches = nlohmann::json::array();
  for (const Branch& b : r.branches) {
    branches.push_back({{"outcome", b.outcome},
                        {"probability", b.probability},
                        {"correction", pauli_name(b.correction)},
                        {"fidelity", b.fidelity}});
  }
  return {{"channel", r.spec.id()},
          {"theta", r.message.theta},
          {"phi", r.message.phi},
          {"mode", mode_name(r.mode)},
          {"corrections", corrections},
          {"branches", branches},
          {"rho_out", rho},
          {"trace", r.trace},
          {"fidelity", r.fidelity}};
}

}  // namespace teleportlab
