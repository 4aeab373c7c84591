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

#include "cqec/simulator.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "cqec/control.hpp"
#include "cqec/dynamics.hpp"
#include "cqec/noise.hpp"

namespace cqec {

namespace {

// Eigenvalue positivity audit interval for the density-matrix path; the
// per-step diagonal check in sme_step catches blowups sooner.
constexpr int kPositivityStride = 256;

}  // namespace

std::string to_string(EvolutionMode mode) {
  return mode == EvolutionMode::kSse ? "sse" : "sme";
}

EvolutionMode mode_from_string(std::string_view s) {
  if (s == "sse") return EvolutionMode::kSse;
  if (s == "sme") return EvolutionMode::kSme;
  throw ConfigError("unknown mode '" + std::string(s) + "' (valid: sse, sme)");
}

void validate(const SimConfig& cfg) {
  code_by_name(cfg.code);  // throws on unknown code
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw ConfigError("invalid config: " + what);
  };
  require(cfg.gamma >= 0, "gamma must be >= 0");
  require(cfg.kappa >= 0, "kappa must be >= 0");
  require(cfg.lambda_max >= 0, "lambda must be >= 0");
  require(cfg.eta > 0 && cfg.eta <= 1, "eta must be in (0, 1]");
  require(cfg.dt > 0, "dt must be > 0");
  require(cfg.t_final > 0, "t-final must be > 0");
  require(cfg.t_final >= cfg.window, "t-final must be >= window");
  require(cfg.n_traj >= 1, "trajectories must be >= 1");
  require(cfg.sample_stride >= 1, "stride must be >= 1");
  require(cfg.threshold >= 0 && cfg.threshold < 1,
          "threshold must be in [0, 1)");
  if (cfg.kappa > 0) {
    require(cfg.filter_rate > 0, "filter-rate must be > 0");
    require(cfg.window > 0, "window must be > 0");
  }
  if (cfg.gamma * cfg.dt > 0.1) {
    throw ConfigError("time step too coarse: gamma*dt = " +
                      std::to_string(cfg.gamma * cfg.dt) + " > 0.1");
  }
  if (cfg.kappa * cfg.dt > 0.1) {
    throw ConfigError("time step too coarse: kappa*dt = " +
                      std::to_string(cfg.kappa * cfg.dt) + " > 0.1");
  }
  if (cfg.lambda_max * cfg.dt > 0.1) {
    throw ConfigError("time step too coarse: lambda*dt = " +
                      std::to_string(cfg.lambda_max * cfg.dt) + " > 0.1");
  }
  if (cfg.mode == EvolutionMode::kSse && cfg.eta != 1.0) {
    throw ConfigError(
        "sse mode models perfect detection (eta = 1); use mode=sme");
  }
}

namespace {

TrajectoryResult run_one(const SimConfig& cfg, const StabilizerCode& code,
                         const CodeMatrices& mats, int index) {
  const long n_steps = std::lround(cfg.t_final / cfg.dt);
  const int m = code.n_generators();
  const int d = code.n_errors();

  TrajectoryResult result;
  result.jumps.assign(d, 0);
  const auto n_samples = n_steps / cfg.sample_stride + 2;
  result.times.reserve(n_samples);
  result.fidelity.reserve(n_samples);

  TrajectoryNoise noise(cfg.seed, static_cast<std::uint64_t>(index), m, d);

  const bool sse = cfg.mode == EvolutionMode::kSse;
  const Vector& psi0 = code.initial_codeword;
  Vector psi;
  Matrix rho;
  if (sse) {
    psi = psi0;
  } else {
    rho = psi0 * psi0.adjoint();
  }

  // One filter per generator; with kappa = 0 there is no record to smooth
  // and the conditioning signals stay at zero.
  std::vector<RecordFilter> filters;
  if (cfg.kappa > 0) {
    filters.reserve(m);
    for (int l = 0; l < m; ++l) {
      filters.emplace_back(cfg.filter_rate, cfg.window, cfg.dt, cfg.kappa,
                           cfg.early_feedback);
    }
  }
  std::vector<double> smoothed(m, 0.0);

  StepWorkspace ws(mats);
  StepIncrements inc;
  inc.dw.resize(m);
  inc.dn.resize(d);

  auto record = [&](long step) {
    result.times.push_back(static_cast<double>(step) * cfg.dt);
    result.fidelity.push_back(sse ? codeword_fidelity(psi0, psi)
                                  : codeword_fidelity(psi0, rho));
  };
  record(0);

  try {
    for (long i = 0; i < n_steps; ++i) {
      const bool warming = !filters.empty() && !cfg.early_feedback &&
                           filters.front().warming();
      const ConditioningSignals cond =
          conditioning(code, smoothed, warming, cfg.threshold);
      const StepInput in{cfg.kappa, cfg.gamma,     cfg.lambda_max,
                         cfg.eta,   cfg.dt,        cond.g};

      StepRecord rec;
      if (sse) {
        for (int k = 0; k < d; ++k) {
          inc.dn[k] = noise.error[k].jump(cfg.gamma * code.error_rates[k],
                                          cfg.dt);
        }
        for (int l = 0; l < m; ++l) {
          inc.dw[l] = noise.measurement[l].wiener(cfg.dt);
        }
        rec = sse_step(psi, mats, in, inc, ws);
        for (int k = 0; k < d; ++k) result.jumps[k] += rec.jumps[k];
      } else {
        for (int l = 0; l < m; ++l) {
          inc.dw[l] = noise.measurement[l].wiener(cfg.dt);
        }
        rec = sme_step(rho, mats, in, inc.dw, ws);
        if ((i + 1) % kPositivityStride == 0 && min_eigenvalue(rho) < -1e-3) {
          throw NumericalError(
              "density matrix positivity violated; decrease dt");
        }
      }

      for (std::size_t l = 0; l < filters.size(); ++l) {
        smoothed[l] = filters[l].update(rec.dq[l]);
      }

      if ((i + 1) % cfg.sample_stride == 0 || i + 1 == n_steps) {
        record(i + 1);
      }
    }
  } catch (const DegenerateStateError&) {
    result.aborted = true;
  }
  return result;
}

}  // namespace

TrajectoryResult run_trajectory(const SimConfig& cfg, int index) {
  validate(cfg);
  const StabilizerCode code = code_by_name(cfg.code);
  const CodeMatrices mats(code);
  return run_one(cfg, code, mats, index);
}

EnsembleResult run_ensemble(const SimConfig& cfg, int threads) {
  validate(cfg);
  const StabilizerCode code = code_by_name(cfg.code);
  const CodeMatrices mats(code);

  const int n = cfg.n_traj;
  std::vector<TrajectoryResult> trajectories(n);

  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > n) workers = n;

  if (workers == 1) {
    for (int i = 0; i < n; ++i) {
      trajectories[i] = run_one(cfg, code, mats, i);
    }
  } else {
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto work = [&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          trajectories[i] = run_one(cfg, code, mats, i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  EnsembleResult out;
  out.config = cfg;
  out.total_jumps.assign(code.n_errors(), 0);

  // Reduce in trajectory-index order for bit-exact reproducibility.
  for (const auto& traj : trajectories) {
    if (traj.aborted) {
      ++out.n_aborted;
      continue;
    }
    ++out.n_effective;
    if (out.times.empty()) out.times = traj.times;
    for (std::size_t k = 0; k < traj.jumps.size(); ++k) {
      out.total_jumps[k] += traj.jumps[k];
    }
  }
  if (out.n_aborted > 0 && out.n_aborted * 10 > n) {
    throw NumericalError(std::to_string(out.n_aborted) + " of " +
                         std::to_string(n) +
                         " trajectories aborted; decrease dt");
  }
  if (out.n_effective == 0) {
    throw NumericalError("all trajectories aborted");
  }

  const std::size_t n_samples = out.times.size();
  out.mean_fidelity.assign(n_samples, 0.0);
  out.stderr_fidelity.assign(n_samples, 0.0);
  for (const auto& traj : trajectories) {
    if (traj.aborted) continue;
    for (std::size_t j = 0; j < n_samples; ++j) {
      out.mean_fidelity[j] += traj.fidelity[j];
    }
  }
  for (std::size_t j = 0; j < n_samples; ++j) {
    out.mean_fidelity[j] /= out.n_effective;
  }
  if (out.n_effective > 1) {
    for (const auto& traj : trajectories) {
      if (traj.aborted) continue;
      for (std::size_t j = 0; j < n_samples; ++j) {
        const double dev = traj.fidelity[j] - out.mean_fidelity[j];
        out.stderr_fidelity[j] += dev * dev;
      }
    }
    for (std::size_t j = 0; j < n_samples; ++j) {
      out.stderr_fidelity[j] = std::sqrt(
          out.stderr_fidelity[j] /
          (static_cast<double>(out.n_effective - 1) * out.n_effective));
    }
  }
  return out;
}

double analytic_f1(double gamma, double t) {
  if (gamma < 0 || t < 0) {
    throw std::invalid_argument("analytic_f1: gamma and t must be >= 0");
  }
  return 0.5 * (1.0 + std::exp(-2.0 * gamma * t));
}

double analytic_f3d(double gamma, double t) {
  if (gamma < 0 || t < 0) {
    throw std::invalid_argument("analytic_f3d: gamma and t must be >= 0");
  }
  return 0.25 * (2.0 + 3.0 * std::exp(-2.0 * gamma * t) -
                 std::exp(-6.0 * gamma * t));
}

}  // namespace cqec
