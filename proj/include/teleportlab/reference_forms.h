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

#ifndef TELEPORTLAB_REFERENCE_FORMS_H_
#define TELEPORTLAB_REFERENCE_FORMS_H_

#include <string>
#include <string_view>
#include <vector>

#include "teleportlab/channels.h"
#include "teleportlab/linalg.h"
#include "teleportlab/noise.h"
#include "teleportlab/symbolic.h"

namespace teleportlab {

// coefficient * |ket><bra|. Bra amplitudes are used as written.
struct FormTerm {
  Poly coefficient;
  SparseKet ket;
  SparseKet bra;
};

// Published closed form of a collectively noisy channel (first variant of
// each family), transcribed verbatim including its visible typos.
struct ReferenceForm {
  Family family = Family::Bell;
  NoiseKind kind = NoiseKind::BitFlip;
  int n_qubits = 0;
  double scale = 1.0;
  std::vector<FormTerm> terms;
  // Transcription problems found while parsing, e.g. kets of the wrong length.
  std::vector<std::string> notes;

  std::string key() const;
  Matrix evaluate(double eta) const;
};

// Text form, one block per form:
//   form <family> <noise> <scale>
//     <poly> | <kets> | <bras>
// Kets are "+00", "-(s2)11" or "+@" (the channel's own sign pattern).
std::vector<ReferenceForm> parse_reference_forms(std::string_view text);

// All 36 transcriptions, parsed once.
const std::vector<ReferenceForm>& reference_forms();
const ReferenceForm& reference_form(Family family, NoiseKind kind);

struct FormComparison {
  std::string key;
  bool matches = false;
  // Largest entrywise gap to the regenerated form over the probe grid.
  double max_diff = 0.0;
  double worst_eta = 0.0;
  std::vector<std::string> notes;
};

// Transcription vs. regenerated_form at eta in {0.1, 0.3, 0.5, 0.9}.
FormComparison compare_reference_form(const ReferenceForm& form);
std::vector<FormComparison> compare_all_reference_forms();

// Transcription when it agrees with the regenerated form, otherwise the
// regenerated form. Only the first variant of each family has a closed form;
// other specs throw std::invalid_argument.
Matrix closed_form_density(const ChannelSpec& spec, NoiseKind kind, double eta);

}  // namespace teleportlab

#endif  // TELEPORTLAB_REFERENCE_FORMS_H_
