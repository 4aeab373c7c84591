// Copyright 2026 The cqecsim Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cqec/simulator.hpp"

namespace cqec {

inline constexpr std::string_view kVersion = "0.1.0";

/// Named parameter sets for the shipped experiments.
struct Preset {
  std::string name;
  std::string description;
  SimConfig config;
};

const std::vector<Preset>& presets();

/// Throws ConfigError listing valid names.
SimConfig preset_config(std::string_view name);

/// Flat key=value config text, keys mirroring the CLI flag names
/// (gamma, kappa, lambda, filter-rate, window, eta, dt, t-final,
/// trajectories, seed, mode, code, early-feedback, threshold, stride).
/// '#' starts a comment. Unknown keys are rejected with the valid list.
SimConfig parse_config_text(std::string_view text,
                            SimConfig base = SimConfig{});
SimConfig parse_config_file(const std::string& path,
                            SimConfig base = SimConfig{});

/// Inverse of parse_config_text: parse_config_text(serialize_config(c)) == c.
std::string serialize_config(const SimConfig& cfg);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

}  // namespace cqec
