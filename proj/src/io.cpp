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

#include "cqec/io.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "cqec/config.hpp"

namespace cqec {

std::string curve_csv(const EnsembleResult& result) {
  const bool with_f3d = result.config.code == "bitflip3";
  std::ostringstream out;
  out << "t,f_mean,f_stderr,f1_analytic";
  if (with_f3d) out << ",f3d_analytic";
  out << '\n';
  for (std::size_t j = 0; j < result.times.size(); ++j) {
    const double t = result.times[j];
    out << format_double(t) << ',' << format_double(result.mean_fidelity[j])
        << ',' << format_double(result.stderr_fidelity[j]) << ','
        << format_double(analytic_f1(result.config.gamma, t));
    if (with_f3d) {
      out << ',' << format_double(analytic_f3d(result.config.gamma, t));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

nlohmann::json config_json(const SimConfig& cfg) {
  return {
      {"code", cfg.code},
      {"mode", to_string(cfg.mode)},
      {"gamma", cfg.gamma},
      {"kappa", cfg.kappa},
      {"lambda", cfg.lambda_max},
      {"filter-rate", cfg.filter_rate},
      {"window", cfg.window},
      {"eta", cfg.eta},
      {"dt", cfg.dt},
      {"t-final", cfg.t_final},
      {"trajectories", cfg.n_traj},
      {"seed", cfg.seed},
      {"early-feedback", cfg.early_feedback},
      {"threshold", cfg.threshold},
      {"stride", cfg.sample_stride},
  };
}

nlohmann::json result_json(const RunArtifact& run) {
  const auto& r = run.result;
  nlohmann::json j{
      {"csv", run.csv_file},
      {"t_final", r.times.back()},
      {"f_mean_final", r.mean_fidelity.back()},
      {"f_stderr_final", r.stderr_fidelity.back()},
      {"n_effective", r.n_effective},
      {"n_aborted", r.n_aborted},
      {"jumps_per_channel", r.total_jumps},
  };
  if (!run.swept_key.empty()) {
    j["param"] = run.swept_key;
    j["value"] = run.swept_value;
  }
  return j;
}

}  // namespace

std::string summary_json(const std::vector<RunArtifact>& runs,
                         const std::string& preset_name, int threads,
                         const std::string& timestamp) {
  nlohmann::json outputs = nlohmann::json::array();
  nlohmann::json results = nlohmann::json::array();
  for (const auto& run : runs) {
    outputs.push_back(run.csv_file);
    results.push_back(result_json(run));
  }
  nlohmann::json doc{
      {"manifest",
       {
           {"artifact", "cqecsim"},
           {"version", std::string(kVersion)},
           {"timestamp", timestamp},
           {"preset", preset_name.empty() ? nlohmann::json{} : preset_name},
           {"threads", threads},
           // Sweeps reuse the master seed, so all points share noise.
           {"common_random_numbers", true},
           {"config", config_json(runs.front().result.config)},
           {"outputs", outputs},
       }},
      {"results", results},
  };
  return doc.dump(2) + "\n";
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace cqec
