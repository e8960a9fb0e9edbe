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

#ifndef TELEPORTLAB_REPORT_H_
#define TELEPORTLAB_REPORT_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "teleportlab/channels.h"
#include "teleportlab/fidelity.h"
#include "teleportlab/reference_forms.h"
#include "teleportlab/teleport.h"

namespace teleportlab {

// CSV.

inline constexpr std::string_view kCsvHeader =
    "channel,family_bits,noise,mode,eta,theta,phi,fidelity";

// Shortest round-trippable text at 12 significant digits, "C" locale.
std::string format_number(double v);

void write_csv(std::ostream& out, const SweepResult& rows);
std::string to_csv(const SweepResult& rows);
// Throws std::invalid_argument on a malformed file.
SweepResult parse_csv(std::istream& in);
SweepResult parse_csv(std::string_view text);

// SVG.

// One polyline per noise kind for the rows of `channel_id` (ChannelSpec::id()),
// averaging over input messages at each eta. Axes span [0, 1] x [0, 1].
std::string render_svg(const SweepResult& rows, std::string_view channel_id,
                       std::string_view title);

// Cost.

struct CostRow {
  ChannelSpec spec;
  int prep = 0;
  int protocol = 0;
  int correction = 0;
  int derived = 0;
  std::optional<int> published;
};

struct FamilyCost {
  Family family = Family::Bell;
  int variants = 0;
  double derived_average = 0.0;
  std::optional<double> published_average;
};

struct CostReport {
  std::vector<CostRow> rows;
  std::vector<FamilyCost> families;
};

CostReport cost_report(const std::vector<ChannelSpec>& specs);
std::string format_cost_report(const CostReport& report);
nlohmann::json cost_report_json(const CostReport& report);

// Table verification.

struct TableCheck {
  std::string fixture_id;
  std::string channel;  // ChannelSpec::id()
  int rows = 0;
  int matched = 0;
  std::vector<TableDelta> deltas;
  // Reason string from the allowlist, or empty for an unexplained delta.
  std::vector<std::string> reasons;
};

struct VerifyReport {
  std::vector<TableCheck> tables;
  std::vector<FormComparison> forms;

  int unexplained_table_deltas() const;
  int unexplained_form_deltas() const;
  bool ok() const { return unexplained_table_deltas() == 0 && unexplained_form_deltas() == 0; }
};

VerifyReport verify_tables();
std::string format_verify_report(const VerifyReport& report);
nlohmann::json verify_report_json(const VerifyReport& report);

// Other JSON records.

nlohmann::json channel_json(const ChannelState& channel);
nlohmann::json run_json(const ProtocolRun& run);

}  // namespace teleportlab

#endif  // TELEPORTLAB_REPORT_H_
