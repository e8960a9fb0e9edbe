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

#include "teleportlab/fidelity.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"

namespace teleportlab {
namespace {

using std::numbers::pi;

const ChannelSpec kBell = make_spec(Family::Bell, "00");

double bell_bit_flip(double eta) {
  return noisy_fidelity(kBell, {NoiseKind::BitFlip, eta}, MessageState{pi / 2, 0.0});
}

TEST(NoisyFidelityTest, ZeroNoiseIsPerfect) {
  for (const auto& s : enumerate_variants()) {
    for (NoiseKind k : kAllNoiseKinds) {
      EXPECT_NEAR(noisy_fidelity(s, {k, 0.0}, MessageState{1.0, 2.0}), 1.0, kAlgebraicTol)
          << s.id() << " " << noise_name(k);
    }
  }
}

// Collective bit flip on a Bell pair scales the output by (1-eta)^2 + eta^2.
TEST(NoisyFidelityTest, BellBitFlipValues) {
  EXPECT_NEAR(bell_bit_flip(0.5), 0.5, 1e-9);
  EXPECT_NEAR(bell_bit_flip(1.0), 1.0, 1e-9);
  EXPECT_NEAR(bell_bit_flip(0.2), 0.68, 1e-9);
}

TEST(NoisyFidelityTest, GhzBitFlipRecoversAtFullStrength) {
  EXPECT_NEAR(noisy_fidelity(make_spec(Family::GHZ, "000"), {NoiseKind::BitFlip, 1.0},
                             MessageState{pi / 3, 0.4}),
              1.0, 1e-9);
}

// XX commutes with the Bell stabilizers, so the message does not matter.
TEST(NoisyFidelityProperty, BellBitFlipIsInputIndependent) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const MessageState m = testing::random_message(rng);
    for (double eta : {0.1, 0.35, 0.8}) {
      EXPECT_NEAR(noisy_fidelity(kBell, {NoiseKind::BitFlip, eta}, m),
                  (1 - eta) * (1 - eta) + eta * eta, kAlgebraicTol);
    }
  }
}

TEST(NoisyFidelityProperty, BoundedAcrossVariants) {
  std::mt19937_64 rng(22);
  for (const auto& s : enumerate_variants()) {
    const MessageState m = testing::random_message(rng);
    for (NoiseKind k : kAllNoiseKinds) {
      for (double eta : {0.2, 0.5, 1.0}) {
        for (Application a : {Application::Collective, Application::Independent}) {
          const double f = noisy_fidelity(s, {k, eta}, m, {a, Mode::Coherent, false});
          EXPECT_GE(f, -kAlgebraicTol) << s.id();
          EXPECT_LE(f, 1.0 + 1e-10) << s.id();
        }
      }
    }
  }
}

TEST(NoisyFidelityTest, RenormalizeDividesByTrace) {
  const MessageState m{0.7, 1.3};
  const NoiseModel model{NoiseKind::AmplitudeDamping, 0.4};
  const double raw = noisy_fidelity(kBell, model, m);
  const double norm = noisy_fidelity(kBell, model, m, {Application::Collective, Mode::Coherent, true});
  // Bell AD trace: (1 + (1-eta)^2 + eta^2) / 2.
  const double trace = (1 + 0.36 + 0.16) / 2;
  EXPECT_NEAR(norm, raw / trace, kAlgebraicTol);
}

TEST(NoisyFidelityTest, MeasuredAndCoherentAgree) {
  const MessageState m{1.1, 0.2};
  for (const auto& s : select_variants("bell-11,ghz-010,cluster2-01,brown")) {
    for (NoiseKind k : kAllNoiseKinds) {
      const NoiseModel model{k, 0.3};
      EXPECT_NEAR(noisy_fidelity(s, model, m, {Application::Collective, Mode::Measured, false}),
                  noisy_fidelity(s, model, m), kAlgebraicTol)
          << s.id() << " " << noise_name(k);
    }
  }
}

TEST(InputPolicyTest, Messages) {
  EXPECT_EQ(policy_messages({}).size(), 1u);
  InputPolicy axial;
  axial.kind = InputKind::Axial;
  EXPECT_EQ(policy_messages(axial).size(), 6u);
  InputPolicy samples;
  samples.kind = InputKind::Samples;
  samples.samples = 17;
  const auto a = policy_messages(samples);
  ASSERT_EQ(a.size(), 17u);
  const auto b = policy_messages(samples);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].theta, b[i].theta);
    EXPECT_EQ(a[i].phi, b[i].phi);
  }
  samples.samples = 0;
  EXPECT_THROW(samples.validate(), std::invalid_argument);
  EXPECT_EQ(parse_input_kind("axial"), InputKind::Axial);
  EXPECT_THROW(parse_input_kind("random"), std::invalid_argument);
}

TEST(AverageFidelityTest, SampleCountConverges) {
  const ChannelSpec s = make_spec(Family::GHZ, "000");
  const NoiseModel model{NoiseKind::PhaseFlip, 0.5};
  InputPolicy small;
  small.kind = InputKind::Samples;
  small.samples = 200;
  InputPolicy large = small;
  large.samples = 2000;
  EXPECT_LT(std::abs(average_fidelity(s, model, small) - average_fidelity(s, model, large)),
            0.01);
}

TEST(GridTest, DefaultGrid) {
  const auto g = default_grid();
  ASSERT_EQ(g.size(), 51u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g[25], 0.5);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_NO_THROW(validate_grid(g));
}

TEST(GridTest, Errors) {
  EXPECT_EQ(make_grid(0.0, 1.0, 0.25).size(), 5u);
  EXPECT_THROW(make_grid(0.0, 1.0, 0.3), std::invalid_argument);
  EXPECT_THROW(make_grid(0.0, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(make_grid(0.5, 0.1, 0.1), std::invalid_argument);
  EXPECT_THROW(validate_grid({}), std::invalid_argument);
  EXPECT_THROW(validate_grid({0.5, 0.2}), std::invalid_argument);
  EXPECT_THROW(validate_grid({0.0, 1.5}), std::invalid_argument);
}

TEST(SweepTest, RowCountAndOrder) {
  SweepConfig c;
  c.channels = {kBell};
  c.kinds = std::vector<NoiseKind>(kAllNoiseKinds.begin(), kAllNoiseKinds.end());
  const SweepResult rows = sweep(c);
  ASSERT_EQ(rows.size(), 6u * 51u);
  EXPECT_EQ(rows[0].channel, "bell");
  EXPECT_EQ(rows[0].family_bits, "00");
  EXPECT_EQ(rows[0].noise, kAllNoiseKinds[0]);
  EXPECT_EQ(rows[1].eta, c.grid[1]);
  EXPECT_EQ(rows[51].noise, kAllNoiseKinds[1]);
  EXPECT_NEAR(rows[25].fidelity, 0.5, 1e-9);  // bit flip at 0.5
}

TEST(SweepProperty, ThreadCountDoesNotChangeOutput) {
  SweepConfig c;
  c.channels = select_variants("bell-10,ghz-110,cluster3-011");
  c.kinds = {NoiseKind::AmplitudeDamping, NoiseKind::Depolarizing};
  c.grid = make_grid(0.0, 1.0, 0.1);
  c.policy.kind = InputKind::Samples;
  c.policy.samples = 5;
  c.threads = 1;
  const SweepResult one = sweep(c);
  EXPECT_EQ(one.size(), 3u * 2u * 11u * 5u);
  for (int t : {2, 3, 8}) {
    c.threads = t;
    EXPECT_EQ(sweep(c), one) << t << " threads";
  }
}

TEST(SweepTest, RejectsEmptySelections) {
  SweepConfig c;
  c.kinds = {NoiseKind::BitFlip};
  EXPECT_THROW(sweep(c), std::invalid_argument);
  c.channels = {kBell};
  c.kinds.clear();
  EXPECT_THROW(sweep(c), std::invalid_argument);
}

}  // namespace
}  // namespace teleportlab
