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

#include "cqec/noise.hpp"

#include <cmath>
#include <string>

namespace cqec {

namespace {

// SplitMix64 finalizer; mixes the key fields into a well-scrambled seed.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trajectory,
                          std::uint64_t channel) {
  return mix(mix(mix(master) ^ trajectory) ^ channel);
}

}  // namespace

NoiseStream::NoiseStream(std::uint64_t master_seed, std::uint64_t trajectory,
                         std::uint64_t channel)
    : engine_(derive_seed(master_seed, trajectory, channel)) {}

double NoiseStream::wiener(double dt) {
  if (dt <= 0) throw std::invalid_argument("wiener: dt must be positive");
  return normal_(engine_) * std::sqrt(dt);
}

int NoiseStream::jump(double gamma, double dt) {
  if (gamma < 0) throw std::invalid_argument("jump: gamma must be >= 0");
  if (dt <= 0) throw std::invalid_argument("jump: dt must be positive");
  const double p = gamma * dt;
  if (p > 0.1) {
    throw ConfigError("time step too coarse for jump process (gamma*dt = " +
                      std::to_string(p) + " > 0.1)");
  }
  return uniform_(engine_) < p ? 1 : 0;
}

TrajectoryNoise::TrajectoryNoise(std::uint64_t master_seed,
                                 std::uint64_t trajectory, int n_generators,
                                 int n_errors) {
  measurement.reserve(n_generators);
  for (int l = 0; l < n_generators; ++l) {
    measurement.emplace_back(master_seed, trajectory, l);
  }
  error.reserve(n_errors);
  for (int k = 0; k < n_errors; ++k) {
    error.emplace_back(master_seed, trajectory, n_generators + k);
  }
}

}  // namespace cqec
