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

#include "teleportlab/noise.h"

#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "teleportlab/circuit.h"
#include "teleportlab/reference_forms.h"
#include "test_util.h"

namespace teleportlab {
namespace {

constexpr std::array kEtas = {0.1, 0.3, 0.5, 0.9};

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Vector bell(int sign) { return (ket("00") + sign * ket("11")) * kInvSqrt2; }

std::vector<int> all_qubits(int n) {
  std::vector<int> q(n);
  std::iota(q.begin(), q.end(), 0);
  return q;
}

Matrix collective(const ChannelSpec& s, NoiseKind kind, double eta) {
  return noisy_channel_density(s, {kind, eta}, Application::Collective);
}

TEST(KrausSetTest, BitFlipAtZero) {
  const KrausSet ks = kraus_set({NoiseKind::BitFlip, 0.0});
  ASSERT_EQ(ks.size(), 2u);
  EXPECT_EQ(ks[0], Matrix(Matrix::Identity(2, 2)));
  EXPECT_EQ(ks[1], Matrix(Matrix::Zero(2, 2)));
}

TEST(KrausSetTest, AmplitudeDampingDecayEntry) {
  const KrausSet ks = kraus_set({NoiseKind::AmplitudeDamping, 0.36});
  Matrix e1 = Matrix::Zero(2, 2);
  e1(0, 1) = 0.6;
  EXPECT_LT(max_abs_diff(ks[1], e1), kAlgebraicTol);
}

TEST(KrausSetTest, DepolarizingWeights) {
  const KrausSet ks = kraus_set({NoiseKind::Depolarizing, 0.3});
  ASSERT_EQ(ks.size(), 4u);
  EXPECT_LT(max_abs_diff(ks[1], Matrix(std::sqrt(0.1) * pauli_x())), kAlgebraicTol);
}

TEST(KrausSetProperty, CompletenessOnGrid) {
  for (NoiseKind k : kAllNoiseKinds) {
    for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      EXPECT_LT(completeness_residual(kraus_set({k, eta})), kAlgebraicTol)
          << noise_name(k) << " " << eta;
    }
  }
}

TEST(NoiseModelTest, RejectsOutOfRange) {
  EXPECT_THROW(NoiseModel({NoiseKind::BitFlip, -0.01}).validate(), std::invalid_argument);
  EXPECT_THROW(NoiseModel({NoiseKind::BitFlip, 1.01}).validate(), std::invalid_argument);
  EXPECT_THROW(kraus_set({NoiseKind::PhaseFlip, std::nan("")}), std::invalid_argument);
}

TEST(NoiseNamesTest, ParseAndList) {
  for (NoiseKind k : kAllNoiseKinds) EXPECT_EQ(parse_noise(noise_name(k)), k);
  EXPECT_EQ(parse_noise("amplitude-damping"), NoiseKind::AmplitudeDamping);
  EXPECT_EQ(parse_noise_list("all").size(), 6u);
  EXPECT_EQ(parse_noise_list("bit-flip,depolarizing"),
            (std::vector<NoiseKind>{NoiseKind::BitFlip, NoiseKind::Depolarizing}));
  EXPECT_THROW(parse_noise("thermal"), std::invalid_argument);
  EXPECT_EQ(parse_noise_list("bit-flip,,").size(), 1u);
  EXPECT_THROW(parse_noise_list(","), std::invalid_argument);
  EXPECT_EQ(parse_application("independent"), Application::Independent);
  EXPECT_THROW(parse_application("global"), std::invalid_argument);
}

// Collective closed forms on the Bell channel, each written out by hand.
TEST(CollectiveBellTest, BitFlip) {
  const ChannelSpec s = make_spec(Family::Bell, "00");
  for (double eta : kEtas) {
    const Matrix expected = ((1 - eta) * (1 - eta) + eta * eta) * projector(bell(1));
    EXPECT_LT(max_abs_diff(collective(s, NoiseKind::BitFlip, eta), expected), kAlgebraicTol);
  }
}

TEST(CollectiveBellTest, AmplitudeDamping) {
  const ChannelSpec s = make_spec(Family::Bell, "00");
  for (double eta : kEtas) {
    const Vector kept = ket("00") + (1 - eta) * ket("11");
    const Matrix expected = 0.5 * (projector(kept) + eta * eta * projector(ket("00")));
    EXPECT_LT(max_abs_diff(collective(s, NoiseKind::AmplitudeDamping, eta), expected),
              kAlgebraicTol);
  }
}

TEST(CollectiveBellTest, Depolarizing) {
  const ChannelSpec s = make_spec(Family::Bell, "00");
  for (double eta : kEtas) {
    const Matrix expected = ((1 - eta) * (1 - eta) + eta * eta / 3) * projector(bell(1));
    EXPECT_LT(max_abs_diff(collective(s, NoiseKind::Depolarizing, eta), expected),
              kAlgebraicTol);
  }
}

TEST(CollectiveBellTest, PhaseDamping) {
  const ChannelSpec s = make_spec(Family::Bell, "00");
  for (double eta : kEtas) {
    const Matrix expected =
        0.5 * ((1 - eta) * (1 - eta) * projector(ket("00") + ket("11")) +
               eta * eta * (projector(ket("00")) + projector(ket("11"))));
    EXPECT_LT(max_abs_diff(collective(s, NoiseKind::PhaseDamping, eta), expected),
              kAlgebraicTol);
  }
}

TEST(CollectiveGhzTest, BitFlipAndPhaseFlip) {
  const ChannelSpec s = make_spec(Family::GHZ, "000");
  for (double eta : kEtas) {
    const double a = std::pow(1 - eta, 3), b = std::pow(eta, 3);
    const Matrix bit = (a + b) * projector((ket("000") + ket("111")) * kInvSqrt2);
    EXPECT_LT(max_abs_diff(collective(s, NoiseKind::BitFlip, eta), bit), kAlgebraicTol);
    const Matrix phase = 0.5 * (a * projector(ket("000") + ket("111")) +
                                b * projector(ket("000") - ket("111")));
    EXPECT_LT(max_abs_diff(collective(s, NoiseKind::PhaseFlip, eta), phase), kAlgebraicTol);
  }
}

TEST(CollectiveClusterTest, TwoQubitBitFlip) {
  const ChannelSpec s = make_spec(Family::Cluster2, "00");
  const Vector psi = 0.5 * (ket("00") + ket("01") + ket("10") - ket("11"));
  const Vector flipped = 0.5 * (ket("11") + ket("10") + ket("01") - ket("00"));
  for (double eta : kEtas) {
    const Matrix expected =
        (1 - eta) * (1 - eta) * projector(psi) + eta * eta * projector(flipped);
    EXPECT_LT(max_abs_diff(collective(s, NoiseKind::BitFlip, eta), expected), kAlgebraicTol);
  }
}

TEST(IndependentTest, PhaseFlipOnBell) {
  const ChannelSpec s = make_spec(Family::Bell, "00");
  for (double eta : kEtas) {
    const Matrix expected = ((1 - eta) * (1 - eta) + eta * eta) * projector(bell(1)) +
                            2 * eta * (1 - eta) * projector(bell(-1));
    const Matrix got = noisy_channel_density(s, {NoiseKind::PhaseFlip, eta},
                                             Application::Independent);
    EXPECT_LT(max_abs_diff(got, expected), kAlgebraicTol);
  }
}

TEST(NoiseProperty, ZeroStrengthIsIdentity) {
  for (const auto& s : enumerate_variants()) {
    const Matrix rho = projector(tabulated_state(s));
    for (NoiseKind k : kAllNoiseKinds) {
      for (Application a : {Application::Collective, Application::Independent}) {
        EXPECT_LT(max_abs_diff(noisy_channel_density(s, {k, 0.0}, a), rho), kAlgebraicTol)
            << s.id() << " " << noise_name(k);
      }
    }
  }
}

TEST(NoiseProperty, IndependentIsTracePreservingAndPositive) {
  for (const auto& s : enumerate_variants()) {
    for (NoiseKind k : kAllNoiseKinds) {
      const Matrix rho = noisy_channel_density(s, {k, 0.37}, Application::Independent);
      const auto d = validate_density(rho, false);
      EXPECT_TRUE(d.passed) << s.id() << " " << noise_name(k);
      EXPECT_NEAR(d.trace, 1.0, kAlgebraicTol);
    }
  }
}

TEST(NoiseProperty, CollectiveIsSubnormalizedAndPositive) {
  for (const auto& s : enumerate_variants()) {
    for (NoiseKind k : kAllNoiseKinds) {
      for (double eta : kEtas) {
        const auto d = validate_density(collective(s, k, eta), true);
        EXPECT_TRUE(d.passed) << s.id() << " " << noise_name(k) << " " << eta;
        EXPECT_LE(d.trace, 1.0 + kAlgebraicTol);
      }
    }
  }
}

TEST(NoiseProperty, VectorAndMatrixCollectiveAgree) {
  std::mt19937_64 rng(41);
  const auto q = all_qubits(3);
  for (NoiseKind k : kAllNoiseKinds) {
    const Vector psi = testing::random_ket(rng, 8);
    const KrausSet ks = kraus_set({k, 0.42});
    Matrix sum = Matrix::Zero(8, 8);
    for (const Vector& v : apply_collective(psi, ks, q)) sum += projector(v);
    EXPECT_LT(max_abs_diff(sum, apply_collective(projector(psi), ks, q)), kAlgebraicTol);
  }
}

TEST(NoiseProperty, EnsembleSumsToDensity) {
  for (const auto& s : select_variants("bell-10,ghz-011,cluster3-101,brown")) {
    for (Application a : {Application::Collective, Application::Independent}) {
      const NoiseModel m{NoiseKind::Depolarizing, 0.6};
      const Matrix rho = noisy_channel_density(s, m, a);
      Matrix sum = Matrix::Zero(rho.rows(), rho.cols());
      for (const Vector& v : noisy_channel_ensemble(s, m, a)) sum += projector(v);
      EXPECT_LT(max_abs_diff(sum, rho), kAlgebraicTol) << s.id();
    }
  }
}

// At full damping both collective Kraus strings land on |0...0>: only the
// all-zero and all-one amplitudes survive.
TEST(NoiseProperty, FullAmplitudeDampingCollapsesToGround) {
  for (const auto& s : enumerate_variants()) {
    const Vector psi = tabulated_state(s);
    const Eigen::Index last = psi.size() - 1;
    const double weight = std::norm(psi(0)) + std::norm(psi(last));
    Matrix expected = Matrix::Zero(psi.size(), psi.size());
    expected(0, 0) = weight;
    EXPECT_LT(max_abs_diff(collective(s, NoiseKind::AmplitudeDamping, 1.0), expected),
              kAlgebraicTol)
        << s.id();
  }
}

TEST(NoiseProperty, IndependentCommutesOnDisjointQubits) {
  std::mt19937_64 rng(43);
  for (NoiseKind k : kAllNoiseKinds) {
    const Matrix rho = testing::random_density(rng, 16);
    const KrausSet ks = kraus_set({k, 0.27});
    const std::array a{0, 2};
    const std::array b{3};
    EXPECT_LT(max_abs_diff(apply_independent(apply_independent(rho, ks, a), ks, b),
                           apply_independent(apply_independent(rho, ks, b), ks, a)),
              kAlgebraicTol)
        << noise_name(k);
  }
}

// Unital noise on Bell and GHZ: the closed-form oracle agrees with the
// collective map.
TEST(NoiseProperty, UnitalClosedFormsOnBellAndGhz) {
  for (Family f : {Family::Bell, Family::GHZ}) {
    const ChannelSpec s = select_variants(family_name(f)).front();
    for (NoiseKind k : {NoiseKind::BitFlip, NoiseKind::PhaseFlip, NoiseKind::BitPhaseFlip,
                        NoiseKind::Depolarizing}) {
      for (double eta : {0.1, 0.3, 0.7}) {
        EXPECT_LT(max_abs_diff(closed_form_density(s, k, eta), collective(s, k, eta)),
                  kAlgebraicTol)
            << s.id() << " " << noise_name(k) << " " << eta;
      }
    }
  }
}

TEST(ApplyIndependentTest, RejectsIncompleteKrausSet) {
  KrausSet ks = kraus_set({NoiseKind::BitFlip, 0.3});
  ks.pop_back();
  const std::array q{0};
  EXPECT_THROW(apply_independent(projector(ket("0")), ks, q), std::invalid_argument);
}

}  // namespace
}  // namespace teleportlab
