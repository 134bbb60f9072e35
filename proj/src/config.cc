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

#include <charconv>
#include <sstream>

#include "scenmine/diagnostics.h"

namespace scenmine {
namespace {

double ToDouble(std::string_view key, std::string_view value) {
  std::string text(value);
  try {
    std::size_t used = 0;
    double parsed = std::stod(text, &used);
    if (used == text.size()) return parsed;
  } catch (const std::exception&) {
  }
  throw ConfigError("config key '" + std::string(key) +
                    "' expects a number, got '" + text + "'");
}

std::size_t ToCount(std::string_view key, std::string_view value) {
  std::size_t parsed = 0;
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(),
                                   parsed);
  if (ec != std::errc() || end != value.data() + value.size())
    throw ConfigError("config key '" + std::string(key) +
                      "' expects a non-negative integer, got '" +
                      std::string(value) + "'");
  return parsed;
}

std::string_view Unquote(std::string_view value) {
  if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
      value.back() == value.front())
    return value.substr(1, value.size() - 2);
  return value;
}

}  // namespace

LinkMode ParseLinkMode(std::string_view text) {
  if (text == "full") return LinkMode::kFull;
  if (text == "partial") return LinkMode::kPartial;
  throw ConfigError("mode must be 'full' or 'partial', got '" +
                    std::string(text) + "'");
}

void Config::Set(std::string_view key, std::string_view value) {
  value = Unquote(Trim(value));
  if (key == "damping") {
    summary.damping = ToDouble(key, value);
  } else if (key == "tol" || key == "tolerance") {
    summary.tolerance = ToDouble(key, value);
  } else if (key == "max_iter" || key == "max_iterations") {
    summary.max_iterations = ToCount(key, value);
  } else if (key == "top_n") {
    summary.top_n = ToCount(key, value);
  } else if (key == "edge_threshold") {
    summary.edge_threshold = ToDouble(key, value);
  } else if (key == "beam_width") {
    summary.beam_width = ToCount(key, value);
  } else if (key == "negation_window") {
    reactions.negation_window = ToCount(key, value);
  } else if (key == "implicit_lookback") {
    reactions.implicit_lookback = ToCount(key, value);
  } else if (key == "max_error_line_ratio") {
    max_error_line_ratio = ToDouble(key, value);
  } else if (key == "mode") {
    mode = ParseLinkMode(value);
  } else if (key == "stopwords_file") {
    stopwords_file = std::string(value);
  } else if (key == "pronouns_file") {
    pronouns_file = std::string(value);
  } else if (key == "negations_file") {
    negations_file = std::string(value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void Config::Validate() const {
  if (!(summary.damping > 0.0 && summary.damping < 1.0))
    throw ConfigError("damping must lie in (0, 1)");
  if (!(summary.tolerance > 0.0)) throw ConfigError("tol must be positive");
  if (summary.max_iterations == 0)
    throw ConfigError("max_iter must be at least 1");
  if (summary.top_n == 0) throw ConfigError("top_n must be at least 1");
  if (!(summary.edge_threshold >= 0.0 && summary.edge_threshold < 1.0))
    throw ConfigError("edge_threshold must lie in [0, 1)");
  if (summary.beam_width != 1)
    throw ConfigError("beam_width other than 1 is not supported");
  if (!(max_error_line_ratio >= 0.0 && max_error_line_ratio <= 1.0))
    throw ConfigError("max_error_line_ratio must lie in [0, 1]");
}

Config ParseConfig(std::string_view contents) {
  Config config;
  std::istringstream in{std::string(contents)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#' || text.front() == '[') continue;
    std::size_t eq = text.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(number) +
                        ": expected key = value");
    std::string_view key = Trim(text.substr(0, eq));
    std::string_view value = text.substr(eq + 1);
    std::size_t hash = value.find(" #");
    if (hash != std::string_view::npos) value = value.substr(0, hash);
    try {
      config.Set(key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(number) + ": " +
                        e.what());
    }
  }
  config.Validate();
  return config;
}

Config LoadConfig(const std::string& path) {
  return ParseConfig(ReadFile(path));
}

}  // namespace scenmine
