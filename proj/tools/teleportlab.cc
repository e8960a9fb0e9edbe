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

// Command-line front end: channels, cost, teleport, verify-tables, sweep, plot.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "teleportlab/channels.h"
#include "teleportlab/circuit.h"
#include "teleportlab/config.h"
#include "teleportlab/fidelity.h"
#include "teleportlab/noise.h"
#include "teleportlab/report.h"
#include "teleportlab/teleport.h"

namespace tl = teleportlab;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

// "plot.svg" -> "plot-bell-00.svg" when several channels share one path.
std::string per_channel_path(const std::string& path, const std::string& id) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + "-" + id + p.extension().string())).string();
}

tl::ChannelSpec resolve_channel(const std::string& channel, const std::string& bits) {
  if (channel.find('-') != std::string::npos) {
    if (!bits.empty()) throw std::invalid_argument("give --bits or a full channel id, not both");
    return tl::parse_channel_id(channel);
  }
  const tl::Family f = tl::parse_family(channel);
  std::string b = bits;
  if (b.empty()) b.assign(static_cast<std::size_t>(tl::family_bit_count(f)), '0');
  return tl::make_spec(f, b);
}

// Records a sweep setting only when the flag is actually given, so that
// config-file values survive unless overridden.
void add_setting(CLI::App* app, const std::string& flag, const std::string& key,
                 std::map<std::string, std::string>& values, const std::string& help) {
  app->add_option_function<std::string>(
      flag, [&values, key](const std::string& v) { values[key] = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum teleportation simulator: channels, corrections, noise and fidelity"};
  app.require_subcommand(1);

  // channels
  auto* channels_cmd = app.add_subcommand("channels", "List channel variants as JSON");
  std::string channels_sel = "all";
  channels_cmd->add_option("--channel", channels_sel, "Selector: all, a family, or ids")
      ->capture_default_str();

  // cost
  auto* cost_cmd = app.add_subcommand("cost", "Quantum cost report");
  std::string cost_sel = "all";
  std::string cost_circuit;
  bool cost_json = false;
  cost_cmd->add_option("--channel", cost_sel, "Selector: all, a family, or ids")
      ->capture_default_str();
  cost_cmd->add_option("--circuit", cost_circuit, "Cost of a circuit text file instead");
  cost_cmd->add_flag("--json", cost_json, "Emit JSON");

  // teleport
  auto* tp_cmd = app.add_subcommand("teleport", "Run the protocol once and emit JSON");
  std::string tp_channel = "bell", tp_bits, tp_mode = "coherent", tp_noise, tp_app = "collective";
  double tp_theta = std::numbers::pi / 2, tp_phi = 0.0, tp_eta = 0.0;
  tp_cmd->add_option("--channel", tp_channel, "Family name or channel id")->capture_default_str();
  tp_cmd->add_option("--bits", tp_bits, "Selector bits, e.g. 01");
  tp_cmd->add_option("--theta", tp_theta, "Message polar angle")->capture_default_str();
  tp_cmd->add_option("--phi", tp_phi, "Message phase")->capture_default_str();
  tp_cmd->add_option("--mode", tp_mode, "coherent or measured")->capture_default_str();
  tp_cmd->add_option("--noise", tp_noise, "Optional noise model on the channel");
  tp_cmd->add_option("--eta", tp_eta, "Noise strength")->capture_default_str();
  tp_cmd->add_option("--application", tp_app, "collective or independent")
      ->capture_default_str();

  // verify-tables
  auto* verify_cmd =
      app.add_subcommand("verify-tables", "Compare derived tables and closed forms to fixtures");
  bool verify_json = false;
  verify_cmd->add_flag("--json", verify_json, "Emit JSON");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Fidelity versus eta, written as CSV (+ SVG)");
  std::string sweep_config_path;
  std::map<std::string, std::string> sweep_values;
  sweep_cmd->add_option("--config", sweep_config_path, "key=value config file");
  add_setting(sweep_cmd, "--channel", "channels", sweep_values, "Selector (default all)");
  add_setting(sweep_cmd, "--noise", "noise", sweep_values, "Noise list or all (default all)");
  add_setting(sweep_cmd, "--eta-start", "eta_start", sweep_values, "Grid start (default 0)");
  add_setting(sweep_cmd, "--eta-stop", "eta_stop", sweep_values, "Grid stop (default 1)");
  add_setting(sweep_cmd, "--eta-step", "eta_step", sweep_values, "Grid step (default 0.02)");
  add_setting(sweep_cmd, "--input", "input", sweep_values, "fixed, samples or axial");
  add_setting(sweep_cmd, "--theta", "theta", sweep_values, "Fixed input polar angle");
  add_setting(sweep_cmd, "--phi", "phi", sweep_values, "Fixed input phase");
  add_setting(sweep_cmd, "--samples", "samples", sweep_values, "Sample count");
  add_setting(sweep_cmd, "--seed", "seed", sweep_values, "Sampling seed");
  add_setting(sweep_cmd, "--application", "application", sweep_values,
              "collective or independent");
  add_setting(sweep_cmd, "--mode", "mode", sweep_values, "coherent or measured");
  add_setting(sweep_cmd, "--threads", "threads", sweep_values, "Worker threads (0 = auto)");
  add_setting(sweep_cmd, "--csv", "csv", sweep_values, "CSV output path, - for stdout");
  add_setting(sweep_cmd, "--svg", "svg", sweep_values, "Optional SVG output path");
  sweep_cmd->add_flag_function(
      "--renormalize", [&sweep_values](std::int64_t) { sweep_values["renormalize"] = "true"; },
      "Divide fidelity by trace(rho_out)");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Render an SVG from a sweep CSV");
  std::string plot_csv, plot_svg = "plot.svg", plot_channel, plot_title;
  plot_cmd->add_option("--csv", plot_csv, "Sweep CSV")->required();
  plot_cmd->add_option("--svg", plot_svg, "SVG output path")->capture_default_str();
  plot_cmd->add_option("--channel", plot_channel, "Channel id (default: first row)");
  plot_cmd->add_option("--title", plot_title, "Chart title");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*channels_cmd) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& spec : tl::select_variants(channels_sel)) {
        out.push_back(tl::channel_json(tl::build_channel(spec)));
      }
      std::cout << out.dump(2) << '\n';
    } else if (*cost_cmd) {
      if (!cost_circuit.empty()) {
        const tl::Circuit c = tl::parse_circuit(read_file(cost_circuit));
        if (cost_json) {
          std::cout << nlohmann::json{{"qubits", c.n_qubits},
                                      {"gates", c.gates.size()},
                                      {"cost", tl::quantum_cost(c)}}
                           .dump(2)
                    << '\n';
        } else {
          std::cout << "qubits " << c.n_qubits << ", gates " << c.gates.size() << ", cost "
                    << tl::quantum_cost(c) << '\n';
        }
      } else {
        const auto report = tl::cost_report(tl::select_variants(cost_sel));
        if (cost_json) {
          std::cout << tl::cost_report_json(report).dump(2) << '\n';
        } else {
          std::cout << tl::format_cost_report(report);
        }
      }
    } else if (*tp_cmd) {
      const tl::ChannelSpec spec = resolve_channel(tp_channel, tp_bits);
      const tl::MessageState msg{tp_theta, tp_phi};
      const tl::Mode mode = tl::parse_mode(tp_mode);
      nlohmann::json out;
      if (tp_noise.empty()) {
        out = tl::run_json(tl::run(spec, msg, mode));
      } else {
        const tl::NoiseModel model{tl::parse_noise(tp_noise), tp_eta};
        const auto app_mode = tl::parse_application(tp_app);
        out = tl::run_json(
            tl::run(spec, msg, mode, tl::noisy_channel_ensemble(spec, model, app_mode)));
        out["noise"] = tl::noise_name(model.kind);
        out["eta"] = model.eta;
        out["application"] = tl::application_name(app_mode);
      }
      std::cout << out.dump(2) << '\n';
    } else if (*verify_cmd) {
      const auto report = tl::verify_tables();
      if (verify_json) {
        std::cout << tl::verify_report_json(report).dump(2) << '\n';
      } else {
        std::cout << tl::format_verify_report(report);
      }
      return report.ok() ? 0 : 1;
    } else if (*sweep_cmd) {
      std::map<std::string, std::string> file_values;
      if (!sweep_config_path.empty()) {
        file_values = tl::parse_key_values(read_file(sweep_config_path));
      }
      std::optional<std::string> env_seed;
      if (const char* s = std::getenv(tl::kSeedEnvVar.data())) env_seed = s;
      const tl::RunConfig cfg = tl::resolve_config(file_values, env_seed, sweep_values);
      const tl::SweepConfig sc = cfg.sweep_config();
      const tl::SweepResult rows = tl::sweep(sc);
      write_file(cfg.csv, tl::to_csv(rows));
      if (!cfg.svg.empty()) {
        for (const auto& spec : sc.channels) {
          const std::string path =
              sc.channels.size() == 1 ? cfg.svg : per_channel_path(cfg.svg, spec.id());
          write_file(path, tl::render_svg(rows, spec.id(), spec.id() + " (" +
                                                               sc.policy.descriptor() + ", " +
                                                               cfg.application + ")"));
        }
      }
      if (cfg.csv != "-") {
        std::cerr << "wrote " << rows.size() << " rows to " << cfg.csv << '\n';
      }
    } else if (*plot_cmd) {
      const std::string text = read_file(plot_csv);
      const tl::SweepResult rows = tl::parse_csv(text);
      if (rows.empty()) throw std::runtime_error("csv has no rows");
      std::string id = plot_channel;
      if (id.empty()) {
        id = rows.front().family_bits.empty()
                 ? rows.front().channel
                 : rows.front().channel + "-" + rows.front().family_bits;
      }
      write_file(plot_svg, tl::render_svg(rows, id, plot_title.empty() ? id : plot_title));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
