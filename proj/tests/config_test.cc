// Copyright 2026 The scenmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scenmine/config.h"

#include <gtest/gtest.h>

#include "scenmine/diagnostics.h"

namespace scenmine {
namespace {

TEST(Config, DefaultsAreValid) {
  Config c;
  EXPECT_NO_THROW(c.Validate());
  EXPECT_DOUBLE_EQ(c.summary.damping, 0.85);
  EXPECT_DOUBLE_EQ(c.summary.tolerance, 1e-6);
  EXPECT_EQ(c.summary.max_iterations, 100u);
  EXPECT_DOUBLE_EQ(c.summary.edge_threshold, 0.05);
  EXPECT_EQ(c.summary.top_n, 3u);
  EXPECT_EQ(c.reactions.negation_window, 3u);
  EXPECT_EQ(c.reactions.implicit_lookback, 2u);
  EXPECT_DOUBLE_EQ(c.max_error_line_ratio, 0.5);
  EXPECT_EQ(c.mode, LinkMode::kFull);
}

TEST(ParseConfig, ReadsEveryTunable) {
  Config c = ParseConfig(
      "# tunables\n"
      "[summary]\n"
      "damping = 0.9\n"
      "tol = 1e-8\n"
      "max_iter = 50\n"
      "top_n = 2   # per part\n"
      "edge_threshold = 0.1\n"
      "negation_window = 2\n"
      "implicit_lookback = 1\n"
      "max_error_line_ratio = 0.25\n"
      "mode = \"partial\"\n");
  EXPECT_DOUBLE_EQ(c.summary.damping, 0.9);
  EXPECT_DOUBLE_EQ(c.summary.tolerance, 1e-8);
  EXPECT_EQ(c.summary.max_iterations, 50u);
  EXPECT_EQ(c.summary.top_n, 2u);
  EXPECT_DOUBLE_EQ(c.summary.edge_threshold, 0.1);
  EXPECT_EQ(c.reactions.negation_window, 2u);
  EXPECT_EQ(c.reactions.implicit_lookback, 1u);
  EXPECT_DOUBLE_EQ(c.max_error_line_ratio, 0.25);
  EXPECT_EQ(c.mode, LinkMode::kPartial);
}

TEST(ParseConfig, UnknownKeyReportsLine) {
  try {
    ParseConfig("damping = 0.8\nwarp = 9\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    std::string what = e.what();
    EXPECT_NE(what.find("line 2"), std::string::npos) << what;
    EXPECT_NE(what.find("warp"), std::string::npos) << what;
  }
}

TEST(ParseConfig, RejectsOutOfRangeValues) {
  for (const char* text :
       {"damping = 1.0", "damping = 0", "tol = 0", "max_iter = 0", "top_n = 0",
        "edge_threshold = 1", "beam_width = 2", "max_error_line_ratio = 1.5",
        "mode = greedy", "damping = abc", "top_n = -1", "just words"}) {
    EXPECT_THROW(ParseConfig(text), ConfigError) << text;
  }
}

TEST(Config, SetOverridesFileValue) {
  Config c = ParseConfig("top_n = 2\n");
  c.Set("top_n", "5");
  EXPECT_EQ(c.summary.top_n, 5u);
  EXPECT_THROW(c.Set("nope", "1"), ConfigError);
}

TEST(ParseLinkMode, BothModes) {
  EXPECT_EQ(ParseLinkMode("full"), LinkMode::kFull);
  EXPECT_EQ(ParseLinkMode("partial"), LinkMode::kPartial);
  EXPECT_THROW(ParseLinkMode("half"), ConfigError);
}

TEST(LoadConfig, MissingFileIsInputError) {
  EXPECT_THROW(LoadConfig("/nonexistent/scenmine.toml"), InputError);
}

}  // namespace
}  // namespace scenmine
