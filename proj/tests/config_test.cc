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

#include "teleportlab/config.h"

#include <stdexcept>

#include <gtest/gtest.h>

namespace teleportlab {
namespace {

TEST(ParseKeyValuesTest, CommentsAndWhitespace) {
  const auto kv = parse_key_values(
      "# sweep settings\n"
      "channels = ghz\n"
      "\n"
      "  eta_step=0.1   # coarse\n");
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv.at("channels"), "ghz");
  EXPECT_EQ(kv.at("eta_step"), "0.1");
}

TEST(ParseKeyValuesTest, Errors) {
  EXPECT_THROW(parse_key_values("channels ghz\n"), std::invalid_argument);
  EXPECT_THROW(parse_key_values("seed = 1\nseed = 2\n"), std::invalid_argument);
  EXPECT_THROW(parse_key_values(" = 3\n"), std::invalid_argument);
}

TEST(ResolveConfigTest, Defaults) {
  const RunConfig c = resolve_config({}, std::nullopt, {});
  EXPECT_EQ(c.seed, 2026u);
  EXPECT_EQ(c.application, "collective");
  EXPECT_FALSE(c.renormalize);
}

TEST(ResolveConfigTest, Precedence) {
  const std::map<std::string, std::string> file = {{"seed", "1"}, {"samples", "50"},
                                                   {"noise", "bit-flip"}};
  EXPECT_EQ(resolve_config(file, std::nullopt, {}).seed, 1u);
  EXPECT_EQ(resolve_config(file, "7", {}).seed, 7u);
  const RunConfig c = resolve_config(file, "7", {{"seed", "9"}});
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.samples, 50);
  EXPECT_EQ(c.noise, "bit-flip");
  // An empty variable is treated as unset.
  EXPECT_EQ(resolve_config(file, "", {}).seed, 1u);
}

TEST(RunConfigTest, RejectsBadInput) {
  RunConfig c;
  EXPECT_THROW(c.set("colour", "red"), std::invalid_argument);
  EXPECT_THROW(c.set("samples", "many"), std::invalid_argument);
  EXPECT_THROW(c.set("seed", "-1"), std::invalid_argument);
  EXPECT_THROW(c.set("renormalize", "maybe"), std::invalid_argument);
  EXPECT_THROW(resolve_config({}, "abc", {}), std::invalid_argument);
  c.set("renormalize", "true");
  EXPECT_TRUE(c.renormalize);
}

TEST(RunConfigTest, SweepConfigResolves) {
  RunConfig c;
  c.apply({{"channels", "bell-01,brown"},
           {"noise", "amplitude-damping,depolarizing"},
           {"eta_step", "0.25"},
           {"input", "samples"},
           {"samples", "12"},
           {"application", "independent"},
           {"mode", "measured"},
           {"threads", "3"}});
  const SweepConfig s = c.sweep_config();
  ASSERT_EQ(s.channels.size(), 2u);
  EXPECT_EQ(s.channels[1].id(), "brown");
  EXPECT_EQ(s.kinds.size(), 2u);
  EXPECT_EQ(s.grid.size(), 5u);
  EXPECT_EQ(s.policy.kind, InputKind::Samples);
  EXPECT_EQ(s.policy.samples, 12);
  EXPECT_EQ(s.options.application, Application::Independent);
  EXPECT_EQ(s.options.mode, Mode::Measured);
  EXPECT_EQ(s.threads, 3);
}

TEST(RunConfigTest, SweepConfigErrors) {
  RunConfig c;
  c.channels = "qutrit";
  EXPECT_THROW(c.sweep_config(), std::invalid_argument);
  c = RunConfig{};
  c.eta_step = 0.3;
  EXPECT_THROW(c.sweep_config(), std::invalid_argument);
  c = RunConfig{};
  c.input = "random";
  EXPECT_THROW(c.sweep_config(), std::invalid_argument);
}

}  // namespace
}  // namespace teleportlab
