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

#ifndef TELEPORTLAB_FIXTURES_H_
#define TELEPORTLAB_FIXTURES_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teleportlab/channels.h"
#include "teleportlab/teleport.h"

namespace teleportlab {

// Published correction table for one family, one column per variant.
struct CorrectionFixture {
  std::string id;  // "bell-corrections", ...
  Family family = Family::Bell;
  std::string provenance;
  // Keyed by the variant's selector bits ("" for Brown and Borras).
  std::map<std::string, CorrectionTable> columns;
};

const std::vector<CorrectionFixture>& correction_fixtures();
const CorrectionFixture& correction_fixture(Family family);

// Published quantum cost of a variant, keyed by ChannelSpec::id().
const std::map<std::string, int>& cost_fixture();
std::optional<int> published_cost(const ChannelSpec& spec);

// A reviewed disagreement between a derived and a published table row.
struct KnownDelta {
  std::string channel;  // ChannelSpec::id()
  std::string outcome;
  std::string derived;
  std::string published;
  std::string reason;
};

const std::vector<KnownDelta>& known_table_deltas();
const KnownDelta* find_known_delta(std::string_view channel, const TableDelta& delta);

// Reviewed closed-form transcription problems, keyed by ReferenceForm::key().
const std::map<std::string, std::string>& known_form_deltas();

}  // namespace teleportlab

#endif  // TELEPORTLAB_FIXTURES_H_
