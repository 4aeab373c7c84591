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

#include "cqec/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cqec {

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    std::vector<Preset> p;

    SimConfig fig2;
    fig2.code = "bitflip3";
    fig2.mode = EvolutionMode::kSse;
    fig2.gamma = 0.1;
    fig2.kappa = 150.0;
    fig2.lambda_max = 150.0;
    fig2.filter_rate = 20.0;
    fig2.window = 0.15;  // 1500 x dt
    fig2.eta = 1.0;
    fig2.dt = 1e-4;
    fig2.t_final = 1.0;
    fig2.n_traj = 600;
    fig2.sample_stride = 10;
    p.push_back({"fig2",
                 "three-qubit bit-flip code benchmark (jump/diffusion pure "
                 "states, kappa=lambda=150/s, r=20/s, T=0.15s)",
                 fig2});

    SimConfig fig3 = fig2;
    fig3.mode = EvolutionMode::kSme;
    fig3.kappa = 50.0;
    fig3.lambda_max = 50.0;
    fig3.filter_rate = 10.0;
    p.push_back({"fig3",
                 "bit-flip code with inefficient detection (density-matrix "
                 "evolution, kappa=lambda=50/s, r=10/s; sweep eta)",
                 fig3});

    SimConfig hw;
    hw.code = "bitflip3";
    hw.mode = EvolutionMode::kSse;
    hw.gamma = 1e2;
    hw.kappa = 1e6;
    hw.lambda_max = 1e7;
    hw.filter_rate = 1e5;
    hw.window = 3e-5;
    hw.eta = 1.0;
    hw.dt = 1e-9;
    hw.t_final = 1e-3;
    hw.n_traj = 100;
    hw.sample_stride = 100;
    p.push_back({"hardware",
                 "charge-qubit readout rates (kappa=1e6/s, lambda=1e7/s, "
                 "gamma=1e2/s, 1e6 steps of 1ns)",
                 hw});
    return p;
  }();
  return all;
}

SimConfig preset_config(std::string_view name) {
  std::string known;
  for (const auto& p : presets()) {
    if (p.name == name) return p.config;
    if (!known.empty()) known += ", ";
    known += p.name;
  }
  throw ConfigError("unknown preset '" + std::string(name) +
                    "' (valid: " + known + ")");
}

namespace {

constexpr const char* kKeys[] = {
    "code",   "mode",         "gamma",     "kappa",  "lambda",
    "filter-rate", "window",  "eta",       "dt",     "t-final",
    "trajectories", "seed",   "early-feedback",      "threshold",
    "stride",
};

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("invalid number for key '" + std::string(key) +
                      "': " + std::string(value));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("invalid boolean for key '" + std::string(key) +
                    "': " + std::string(value));
}

void apply_key(SimConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "code") {
    cfg.code = std::string(value);
  } else if (key == "mode") {
    cfg.mode = mode_from_string(value);
  } else if (key == "gamma") {
    cfg.gamma = parse_number(key, value);
  } else if (key == "kappa") {
    cfg.kappa = parse_number(key, value);
  } else if (key == "lambda") {
    cfg.lambda_max = parse_number(key, value);
  } else if (key == "filter-rate") {
    cfg.filter_rate = parse_number(key, value);
  } else if (key == "window") {
    cfg.window = parse_number(key, value);
  } else if (key == "eta") {
    cfg.eta = parse_number(key, value);
  } else if (key == "dt") {
    cfg.dt = parse_number(key, value);
  } else if (key == "t-final") {
    cfg.t_final = parse_number(key, value);
  } else if (key == "trajectories") {
    cfg.n_traj = static_cast<int>(parse_number(key, value));
  } else if (key == "seed") {
    std::uint64_t seed = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), seed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw ConfigError("invalid seed: " + std::string(value));
    }
    cfg.seed = seed;
  } else if (key == "early-feedback") {
    cfg.early_feedback = parse_bool(key, value);
  } else if (key == "threshold") {
    cfg.threshold = parse_number(key, value);
  } else if (key == "stride") {
    cfg.sample_stride = static_cast<int>(parse_number(key, value));
  } else {
    std::string valid;
    for (const char* k : kKeys) {
      if (!valid.empty()) valid += ", ";
      valid += k;
    }
    throw ConfigError("unknown config key '" + std::string(key) +
                      "' (valid keys: " + valid + ")");
  }
}

}  // namespace

SimConfig parse_config_text(std::string_view text, SimConfig base) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected key=value, got '" + std::string(line) + "'");
    }
    apply_key(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

SimConfig parse_config_file(const std::string& path, SimConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), std::move(base));
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string serialize_config(const SimConfig& cfg) {
  std::ostringstream out;
  out << "code=" << cfg.code << '\n';
  out << "mode=" << to_string(cfg.mode) << '\n';
  out << "gamma=" << format_double(cfg.gamma) << '\n';
  out << "kappa=" << format_double(cfg.kappa) << '\n';
  out << "lambda=" << format_double(cfg.lambda_max) << '\n';
  out << "filter-rate=" << format_double(cfg.filter_rate) << '\n';
  out << "window=" << format_double(cfg.window) << '\n';
  out << "eta=" << format_double(cfg.eta) << '\n';
  out << "dt=" << format_double(cfg.dt) << '\n';
  out << "t-final=" << format_double(cfg.t_final) << '\n';
  out << "trajectories=" << cfg.n_traj << '\n';
  out << "seed=" << cfg.seed << '\n';
  out << "early-feedback=" << (cfg.early_feedback ? "true" : "false") << '\n';
  out << "threshold=" << format_double(cfg.threshold) << '\n';
  out << "stride=" << cfg.sample_stride << '\n';
  return out.str();
}

}  // namespace cqec
