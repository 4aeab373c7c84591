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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cqec/config.hpp"
#include "cqec/io.hpp"
#include "cqec/simulator.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitNumerical = 3;

struct CliOptions {
  std::string preset;
  std::string config_file;
  std::string out_dir;
  int threads = 0;
  // raw flag values; only applied when the flag was given
  std::string code, mode;
  double gamma = 0, kappa = 0, lambda = 0, filter_rate = 0, window = 0;
  double eta = 0, dt = 0, t_final = 0, threshold = 0;
  int trajectories = 0, stride = 0;
  std::uint64_t seed = 0;
  bool early_feedback = false;
};

void add_config_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--preset", opt.preset, "named preset (see `presets`)");
  cmd->add_option("--config", opt.config_file, "key=value config file");
  cmd->add_option("--code", opt.code, "code name: toy, bitflip3");
  cmd->add_option("--mode", opt.mode, "evolution mode: sse, sme");
  cmd->add_option("--gamma", opt.gamma, "error rate per channel (1/s)");
  cmd->add_option("--kappa", opt.kappa, "measurement strength (1/s)");
  cmd->add_option("--lambda", opt.lambda, "max feedback strength (1/s)");
  cmd->add_option("--filter-rate", opt.filter_rate, "filter decay rate (1/s)");
  cmd->add_option("--window", opt.window, "filter memory length (s)");
  cmd->add_option("--eta", opt.eta, "detector efficiency in (0,1]");
  cmd->add_option("--dt", opt.dt, "integration step (s)");
  cmd->add_option("--t-final", opt.t_final, "simulated time span (s)");
  cmd->add_option("--trajectories", opt.trajectories, "ensemble size");
  cmd->add_option("--seed", opt.seed, "master RNG seed");
  cmd->add_option("--threads", opt.threads, "worker cap (0 = all cores)");
  cmd->add_flag("--early-feedback", opt.early_feedback,
                "allow feedback before the filter window fills");
  cmd->add_option("--threshold", opt.threshold,
                  "activation requires R < -threshold (default 0)");
  cmd->add_option("--stride", opt.stride, "store every s-th step");
  cmd->add_option("--out", opt.out_dir, "output directory")->required();
}

cqec::SimConfig resolve_config(const CLI::App* cmd, const CliOptions& opt) {
  cqec::SimConfig cfg;
  if (!opt.preset.empty()) cfg = cqec::preset_config(opt.preset);
  if (!opt.config_file.empty()) {
    cfg = cqec::parse_config_file(opt.config_file, cfg);
  }
  // Explicit flags override preset and file values.
  auto given = [&](const std::string& flag) { return cmd->count(flag) > 0; };
  if (given("--code")) cfg.code = opt.code;
  if (given("--mode")) cfg.mode = cqec::mode_from_string(opt.mode);
  if (given("--gamma")) cfg.gamma = opt.gamma;
  if (given("--kappa")) cfg.kappa = opt.kappa;
  if (given("--lambda")) cfg.lambda_max = opt.lambda;
  if (given("--filter-rate")) cfg.filter_rate = opt.filter_rate;
  if (given("--window")) cfg.window = opt.window;
  if (given("--eta")) cfg.eta = opt.eta;
  if (given("--dt")) cfg.dt = opt.dt;
  if (given("--t-final")) cfg.t_final = opt.t_final;
  if (given("--trajectories")) cfg.n_traj = opt.trajectories;
  if (given("--seed")) cfg.seed = opt.seed;
  if (given("--early-feedback")) cfg.early_feedback = opt.early_feedback;
  if (given("--threshold")) cfg.threshold = opt.threshold;
  if (given("--stride")) cfg.sample_stride = opt.stride;
  cqec::validate(cfg);
  return cfg;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out << contents;
  if (!out) throw std::ios_base::failure("write failed: " + path.string());
}

void write_outputs(const std::vector<cqec::RunArtifact>& runs,
                   const CliOptions& opt) {
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) {
    throw std::ios_base::failure("cannot create output directory " +
                                 opt.out_dir + ": " + ec.message());
  }
  for (const auto& run : runs) {
    write_file(fs::path(opt.out_dir) / run.csv_file, cqec::curve_csv(run.result));
  }
  write_file(fs::path(opt.out_dir) / "summary.json",
             cqec::summary_json(runs, opt.preset, opt.threads,
                                cqec::utc_timestamp()));
}

void report(const cqec::RunArtifact& run) {
  const auto& r = run.result;
  std::cout << "  " << run.csv_file;
  if (!run.swept_key.empty()) {
    std::cout << "  (" << run.swept_key << "="
              << cqec::format_double(run.swept_value) << ")";
  }
  std::cout << "  F(" << cqec::format_double(r.times.back())
            << ") = " << cqec::format_double(r.mean_fidelity.back()) << " +- "
            << cqec::format_double(r.stderr_fidelity.back())
            << "  [trajectories: " << r.n_effective;
  if (r.n_aborted > 0) std::cout << ", aborted: " << r.n_aborted;
  std::cout << "]\n";
}

int cmd_run(const CLI::App* cmd, const CliOptions& opt) {
  const cqec::SimConfig cfg = resolve_config(cmd, opt);
  cqec::RunArtifact run{cqec::run_ensemble(cfg, opt.threads), "curve.csv", "",
                        0.0};
  write_outputs({run}, opt);
  std::cout << "wrote " << opt.out_dir << "/curve.csv, summary.json\n";
  report(run);
  return 0;
}

int cmd_sweep(const CLI::App* cmd, const CliOptions& opt,
              const std::string& param, const std::vector<double>& values) {
  static const std::vector<std::string> kSweepable = {
      "gamma", "kappa",   "lambda",  "filter-rate", "window",
      "eta",   "dt",      "t-final", "threshold"};
  if (std::find(kSweepable.begin(), kSweepable.end(), param) ==
      kSweepable.end()) {
    std::string valid;
    for (const auto& k : kSweepable) valid += (valid.empty() ? "" : ", ") + k;
    throw cqec::ConfigError("cannot sweep '" + param +
                            "' (sweepable: " + valid + ")");
  }
  if (values.empty()) {
    throw cqec::ConfigError("sweep requires at least one value");
  }
  const cqec::SimConfig base = resolve_config(cmd, opt);
  std::vector<cqec::RunArtifact> runs;
  for (double v : values) {
    // Reuse the key=value parser so the swept key follows config semantics.
    cqec::SimConfig cfg = cqec::parse_config_text(
        param + "=" + cqec::format_double(v), base);
    cqec::validate(cfg);
    runs.push_back({cqec::run_ensemble(cfg, opt.threads),
                    "curve_" + param + "_" + cqec::format_double(v) + ".csv",
                    param, v});
  }
  write_outputs(runs, opt);
  std::cout << "wrote " << runs.size() << " curves + summary.json to "
            << opt.out_dir << "\n";
  for (const auto& run : runs) report(run);
  return 0;
}

int cmd_presets() {
  for (const auto& p : cqec::presets()) {
    std::cout << p.name << "\n  " << p.description << "\n  "
              << "code=" << p.config.code << " mode=" << to_string(p.config.mode)
              << " gamma=" << cqec::format_double(p.config.gamma)
              << " kappa=" << cqec::format_double(p.config.kappa)
              << " lambda=" << cqec::format_double(p.config.lambda_max)
              << " r=" << cqec::format_double(p.config.filter_rate)
              << " T=" << cqec::format_double(p.config.window)
              << " dt=" << cqec::format_double(p.config.dt)
              << " t-final=" << cqec::format_double(p.config.t_final)
              << " trajectories=" << p.config.n_traj << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cqecsim: stochastic trajectory simulator for continuous "
               "quantum error correction with weak measurement and filtered "
               "feedback"};
  app.set_version_flag("--version", std::string(cqec::kVersion));
  app.require_subcommand(1);

  CliOptions run_opt, sweep_opt;
  CLI::App* run = app.add_subcommand("run", "run one ensemble");
  add_config_flags(run, run_opt);

  CLI::App* sweep =
      app.add_subcommand("sweep", "run an ensemble per parameter value");
  add_config_flags(sweep, sweep_opt);
  std::string sweep_param;
  std::vector<double> sweep_values;
  sweep->add_option("--param", sweep_param, "parameter to sweep")->required();
  sweep
      ->add_option("--values", sweep_values,
                   "comma-separated values, e.g. 1.0,0.9,0.8")
      ->required()
      ->delimiter(',');

  CLI::App* presets_cmd =
      app.add_subcommand("presets", "list named presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets_cmd->parsed()) return cmd_presets();
    if (run->parsed()) return cmd_run(run, run_opt);
    if (sweep->parsed()) return cmd_sweep(sweep, sweep_opt, sweep_param,
                                          sweep_values);
  } catch (const cqec::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const cqec::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
