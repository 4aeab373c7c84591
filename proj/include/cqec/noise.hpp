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

#include <cstdint>
#include <random>
#include <vector>

#include "cqec/errors.hpp"

namespace cqec {

/// One independent random sub-stream, derived counter-style from
/// (master_seed, trajectory_index, channel). Identical keys reproduce
/// bit-identical sequences; distinct keys give statistically independent
/// ones, so ensemble output does not depend on worker scheduling.
class NoiseStream {
 public:
  NoiseStream(std::uint64_t master_seed, std::uint64_t trajectory,
              std::uint64_t channel);

  /// Wiener increment ~ Normal(0, dt).
  double wiener(double dt);

  /// Jump increment: 1 with probability gamma*dt, else 0. The first-order
  /// Bernoulli approximation requires gamma*dt <= 0.1; beyond that a
  /// ConfigError is thrown.
  int jump(double gamma, double dt);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// The full set of sub-streams one trajectory owns: one Wiener stream per
/// measured generator and one jump stream per error operator.
struct TrajectoryNoise {
  TrajectoryNoise(std::uint64_t master_seed, std::uint64_t trajectory,
                  int n_generators, int n_errors);

  std::vector<NoiseStream> measurement;  // index l: dW_l
  std::vector<NoiseStream> error;        // index k: dN_k
};

}  // namespace cqec
