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
#include <vector>

#include "cqec/simulator.hpp"

namespace cqec {

/// Fidelity curve as CSV. Columns: t,f_mean,f_stderr,f1_analytic and, for
/// the three-qubit code, f3d_analytic. Deterministic bytes for a fixed
/// result (shortest round-trip number formatting).
std::string curve_csv(const EnsembleResult& result);

/// One written ensemble, as recorded in the summary document.
struct RunArtifact {
  EnsembleResult result;
  std::string csv_file;  // file name relative to the output directory
  std::string swept_key; // empty for a plain run
  double swept_value = 0.0;
};

/// Summary document (JSON): a manifest sufficient to reproduce the run
/// (full config echo, seed, preset, artifact version, timestamp, output
/// names) plus final fidelities and jump statistics per run.
std::string summary_json(const std::vector<RunArtifact>& runs,
                         const std::string& preset_name, int threads,
                         const std::string& timestamp);

/// ISO-8601 UTC timestamp for manifests.
std::string utc_timestamp();

}  // namespace cqec
