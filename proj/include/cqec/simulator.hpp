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
#include <string>
#include <vector>

#include "cqec/codes.hpp"
#include "cqec/linalg.hpp"

namespace cqec {

enum class EvolutionMode { kSse, kSme };

std::string to_string(EvolutionMode mode);
EvolutionMode mode_from_string(std::string_view s);

/// Everything one run needs: rates, filter parameters and integration
/// controls. All rates are in 1/s, times in s.
struct SimConfig {
  std::string code{"bitflip3"};
  EvolutionMode mode{EvolutionMode::kSse};
  double gamma{0.1};        // error rate per channel
  double kappa{150.0};      // measurement strength
  double lambda_max{150.0}; // maximum feedback strength
  double filter_rate{20.0}; // filter decay rate r
  double window{0.15};      // filter memory T
  double eta{1.0};          // detector efficiency
  double dt{1e-4};
  double t_final{1.0};
  int n_traj{600};
  std::uint64_t seed{0};
  bool early_feedback{false};
  double threshold{0.0};    // activation requires R < -threshold
  int sample_stride{10};    // store every s-th step

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Throws ConfigError naming the violated constraint.
void validate(const SimConfig& cfg);

/// One unraveling: sampled fidelity curve plus jump statistics.
struct TrajectoryResult {
  std::vector<double> times;
  std::vector<double> fidelity;
  std::vector<long> jumps;  // per error channel
  bool aborted = false;
};

/// Ensemble average with reproducibility metadata.
struct EnsembleResult {
  std::vector<double> times;
  std::vector<double> mean_fidelity;
  std::vector<double> stderr_fidelity;  // sample std / sqrt(n_effective)
  int n_effective = 0;
  int n_aborted = 0;
  std::vector<long> total_jumps;  // per error channel, over kept trajectories
  SimConfig config;
};

/// Runs trajectory `index` of the configured ensemble. Deterministic given
/// (cfg, cfg.seed, index). A degenerate state aborts the trajectory and
/// marks the result instead of throwing.
TrajectoryResult run_trajectory(const SimConfig& cfg, int index);

/// Runs the full ensemble, optionally on `threads` workers (0 = all cores).
/// The reduction runs in trajectory-index order, so output is bit-identical
/// for a fixed seed regardless of worker count. Throws NumericalError when
/// more than 10% of trajectories abort.
EnsembleResult run_ensemble(const SimConfig& cfg, int threads = 0);

/// Unprotected one-qubit baseline 1/2 (1 + e^{-2 gamma t}), the closed-form
/// decay of the codeword population under a bit-flip channel of rate gamma.
double analytic_f1(double gamma, double t);

/// Discrete-correction baseline 1/4 (2 + 3 e^{-2 gamma t} - e^{-6 gamma t}):
/// average fidelity of the three-qubit code when a projective
/// detect-correct cycle runs once after time t.
double analytic_f3d(double gamma, double t);

}  // namespace cqec
