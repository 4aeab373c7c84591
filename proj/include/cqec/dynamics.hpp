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

#include <span>
#include <vector>

#include "cqec/codes.hpp"
#include "cqec/linalg.hpp"
#include "cqec/noise.hpp"

namespace cqec {

/// D[A]rho = A rho A^dag - (A^dag A rho + rho A^dag A)/2
Matrix dissipator(const Matrix& a, const Matrix& rho);

/// H[A]rho = A rho + rho A^dag - rho tr(A rho + rho A^dag)
Matrix innovation(const Matrix& a, const Matrix& rho);

/// Rates and controls for one Euler step.
struct StepInput {
  double kappa;       // measurement strength, 1/s
  double gamma;       // error rate, 1/s
  double lambda_max;  // maximum feedback strength, 1/s
  double eta;         // detector efficiency in (0, 1]
  double dt;          // step, s
  std::span<const double> feedback;  // G_k, one per feedback channel
};

/// Pre-sampled noise for one step: dW_l per generator, dN_k per error.
struct StepIncrements {
  std::vector<double> dw;
  std::vector<int> dn;
};

StepIncrements sample_increments(TrajectoryNoise& noise,
                                 const StabilizerCode& code,
                                 const StepInput& in);

/// Dense realizations of a code's operators, built once per run.
struct CodeMatrices {
  explicit CodeMatrices(const StabilizerCode& code);

  Eigen::Index dim;
  std::vector<Matrix> errors;        // E_k
  std::vector<Matrix> errors_dag;
  std::vector<Matrix> err_dag_err;   // E_k^dag E_k
  std::vector<bool> error_isometry;  // E_k^dag E_k == 1
  std::vector<Matrix> generators;    // M_l
  std::vector<Matrix> generators_sq; // M_l^2
  std::vector<Matrix> gen_dag_gen;   // M_l^dag M_l
  std::vector<bool> generator_isometry;
  std::vector<Matrix> feedbacks;     // F_k
  std::vector<double> error_rates;   // rate multipliers, copied from the code
};

/// Scratch buffers reused across steps of one trajectory.
struct StepWorkspace {
  explicit StepWorkspace(const CodeMatrices& mats);
  std::vector<Vector> gen_psi;  // M_l |psi>
  std::vector<double> exp_gen;  // <M_l>
  Vector v0, dpsi;
  Matrix t0, t1, drho;
};

/// Record and jump outcomes of one step.
struct StepRecord {
  std::vector<double> dq;   // per generator
  std::vector<int> jumps;   // per error (always 0 for the SME path)
};

/// One Euler step of the jump/diffusion pure-state equation. In order:
/// apply each sampled jump E_k, then add the measurement drift
/// -(kappa/2) sum_l (1 - <M_l> M_l)^2 psi dt, the diffusion
/// sum_l sqrt(kappa) dW_l (M_l - <M_l>) psi, and the feedback
/// -i lambda sum_k G_k F_k psi dt, all evaluated on the post-jump state;
/// finally renormalize. Returns dQ_l = 2 kappa <M_l> dt + sqrt(kappa) dW_l
/// with <M_l> taken on the post-jump state.
///
/// Requires eta = 1; inefficient detection is modeled only by sme_step.
StepRecord sse_step(Vector& psi, const CodeMatrices& mats, const StepInput& in,
                    const StepIncrements& inc, StepWorkspace& ws);
StepRecord sse_step(Vector& psi, const CodeMatrices& mats,
                    TrajectoryNoise& noise, const StepInput& in);

/// One Euler step of the conditioned density-matrix equation:
/// drho = gamma sum_k D[E_k] rho dt + kappa sum_l D[M_l] rho dt
///      + sqrt(kappa eta) sum_l H[M_l] rho dW_l
///      - i lambda sum_k G_k [F_k, rho] dt, then trace renormalization.
/// Returns dQ_l = 2 kappa sqrt(eta) <M_l> dt + sqrt(kappa) dW_l.
StepRecord sme_step(Matrix& rho, const CodeMatrices& mats, const StepInput& in,
                    std::span<const double> dw, StepWorkspace& ws);
StepRecord sme_step(Matrix& rho, const CodeMatrices& mats,
                    TrajectoryNoise& noise, const StepInput& in);

/// Smallest eigenvalue of the Hermitian part of rho; the runner checks this
/// periodically and rejects drops below -1e-3 as an integration failure.
double min_eigenvalue(const Matrix& rho);

}  // namespace cqec
