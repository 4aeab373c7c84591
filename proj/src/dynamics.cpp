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

#include "cqec/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace cqec {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

void check_square_match(const Matrix& a, const Matrix& rho, const char* op) {
  if (a.rows() != a.cols() || rho.rows() != rho.cols() ||
      a.rows() != rho.rows()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  }
}

// tr(rho A) without forming the product.
Complex trace_product(const Matrix& rho, const Matrix& a) {
  return rho.transpose().cwiseProduct(a).sum();
}

}  // namespace

Matrix dissipator(const Matrix& a, const Matrix& rho) {
  check_square_match(a, rho, "dissipator");
  const Matrix adag_a = a.adjoint() * a;
  return a * rho * a.adjoint() - 0.5 * (adag_a * rho + rho * adag_a);
}

Matrix innovation(const Matrix& a, const Matrix& rho) {
  check_square_match(a, rho, "innovation");
  const Matrix sym = a * rho + rho * a.adjoint();
  return sym - sym.trace() * rho;
}

StepIncrements sample_increments(TrajectoryNoise& noise,
                                 const StabilizerCode& code,
                                 const StepInput& in) {
  StepIncrements inc;
  inc.dn.resize(code.n_errors());
  for (int k = 0; k < code.n_errors(); ++k) {
    inc.dn[k] = noise.error[k].jump(in.gamma * code.error_rates[k], in.dt);
  }
  inc.dw.resize(code.n_generators());
  for (int l = 0; l < code.n_generators(); ++l) {
    inc.dw[l] = noise.measurement[l].wiener(in.dt);
  }
  return inc;
}

CodeMatrices::CodeMatrices(const StabilizerCode& code) : dim(code.dim()) {
  const Matrix id = Matrix::Identity(dim, dim);
  auto near_identity = [&](const Matrix& m) {
    return (m - id).cwiseAbs().maxCoeff() < 1e-12;
  };
  for (const auto& e : code.errors) {
    errors.push_back(pauli_matrix(e));
    errors_dag.push_back(errors.back().adjoint());
    err_dag_err.push_back(errors_dag.back() * errors.back());
    error_isometry.push_back(near_identity(err_dag_err.back()));
  }
  for (const auto& m : code.generators) {
    generators.push_back(pauli_matrix(m));
    generators_sq.push_back(generators.back() * generators.back());
    gen_dag_gen.push_back(generators.back().adjoint() * generators.back());
    generator_isometry.push_back(near_identity(gen_dag_gen.back()));
  }
  for (const auto& f : code.feedbacks) {
    feedbacks.push_back(pauli_matrix(f));
  }
  error_rates = code.error_rates;
}

StepWorkspace::StepWorkspace(const CodeMatrices& mats) {
  gen_psi.assign(mats.generators.size(), Vector(mats.dim));
  exp_gen.assign(mats.generators.size(), 0.0);
  v0.resize(mats.dim);
  dpsi.resize(mats.dim);
  t0.resize(mats.dim, mats.dim);
  t1.resize(mats.dim, mats.dim);
  drho.resize(mats.dim, mats.dim);
}

StepRecord sse_step(Vector& psi, const CodeMatrices& mats, const StepInput& in,
                    const StepIncrements& inc, StepWorkspace& ws) {
  if (in.eta != 1.0) {
    throw std::invalid_argument(
        "sse_step models perfect detection only (eta = 1); use sme_step");
  }
  const auto n_gen = mats.generators.size();
  const auto n_err = mats.errors.size();
  if (inc.dw.size() != n_gen || inc.dn.size() != n_err) {
    throw std::invalid_argument("sse_step: increment count mismatch");
  }
  if (in.feedback.size() != mats.feedbacks.size()) {
    throw std::invalid_argument("sse_step: feedback signal count mismatch");
  }

  StepRecord rec;
  rec.jumps.assign(inc.dn.begin(), inc.dn.end());

  // (a) jumps: psi <- E_k psi for each dN_k = 1
  for (std::size_t k = 0; k < n_err; ++k) {
    if (inc.dn[k]) {
      ws.v0.noalias() = mats.errors[k] * psi;
      psi.swap(ws.v0);
    }
  }

  // All expectation values on the post-jump state.
  for (std::size_t l = 0; l < n_gen; ++l) {
    ws.gen_psi[l].noalias() = mats.generators[l] * psi;
    ws.exp_gen[l] = psi.dot(ws.gen_psi[l]).real();
  }

  // (b) drift: -(kappa/2) (1 - <M> M)^2 psi dt, expanded with M^2.
  ws.dpsi.setZero(psi.size());
  const double half_kdt = 0.5 * in.kappa * in.dt;
  for (std::size_t l = 0; l < n_gen; ++l) {
    const double m = ws.exp_gen[l];
    ws.v0.noalias() = mats.generators_sq[l] * psi;
    ws.dpsi -= half_kdt * (psi - 2.0 * m * ws.gen_psi[l] + (m * m) * ws.v0);
  }

  // (c) diffusion: sqrt(kappa) dW (M - <M>) psi
  const double sqrt_kappa = std::sqrt(in.kappa);
  for (std::size_t l = 0; l < n_gen; ++l) {
    ws.dpsi += (sqrt_kappa * inc.dw[l]) * (ws.gen_psi[l] - ws.exp_gen[l] * psi);
  }

  // (d) feedback: -i lambda G_k F_k psi dt
  for (std::size_t k = 0; k < mats.feedbacks.size(); ++k) {
    if (in.feedback[k] == 0.0) continue;
    ws.v0.noalias() = mats.feedbacks[k] * psi;
    ws.dpsi += (kMinusI * (in.lambda_max * in.feedback[k] * in.dt)) * ws.v0;
  }

  psi += ws.dpsi;
  normalize(psi);

  rec.dq.resize(n_gen);
  for (std::size_t l = 0; l < n_gen; ++l) {
    rec.dq[l] = 2.0 * in.kappa * ws.exp_gen[l] * in.dt + sqrt_kappa * inc.dw[l];
  }
  return rec;
}

StepRecord sse_step(Vector& psi, const CodeMatrices& mats,
                    TrajectoryNoise& noise, const StepInput& in) {
  StepIncrements inc;
  inc.dn.resize(mats.errors.size());
  for (std::size_t k = 0; k < mats.errors.size(); ++k) {
    inc.dn[k] = noise.error[k].jump(in.gamma * mats.error_rates[k], in.dt);
  }
  inc.dw.resize(mats.generators.size());
  for (std::size_t l = 0; l < mats.generators.size(); ++l) {
    inc.dw[l] = noise.measurement[l].wiener(in.dt);
  }
  StepWorkspace ws(mats);
  return sse_step(psi, mats, in, inc, ws);
}

namespace {

// drho += weight * D[A] rho, with A^dag A == 1 shortcut for Pauli operators.
void add_dissipator(Matrix& drho, Matrix& t0, Matrix& t1, const Matrix& a,
                    const Matrix& a_dag, const Matrix& adag_a, bool isometry,
                    const Matrix& rho, double weight) {
  t0.noalias() = a * rho;
  t1.noalias() = t0 * a_dag;
  drho += weight * t1;
  if (isometry) {
    drho -= weight * rho;
  } else {
    t0.noalias() = adag_a * rho;
    t1.noalias() = rho * adag_a;
    drho -= (0.5 * weight) * (t0 + t1);
  }
}

}  // namespace

StepRecord sme_step(Matrix& rho, const CodeMatrices& mats, const StepInput& in,
                    std::span<const double> dw, StepWorkspace& ws) {
  if (in.eta <= 0.0 || in.eta > 1.0) {
    throw std::invalid_argument("sme_step: eta must be in (0, 1]");
  }
  const auto n_gen = mats.generators.size();
  if (dw.size() != n_gen) {
    throw std::invalid_argument("sme_step: one dW per generator required");
  }
  if (in.feedback.size() != mats.feedbacks.size()) {
    throw std::invalid_argument("sme_step: feedback signal count mismatch");
  }

  for (std::size_t l = 0; l < n_gen; ++l) {
    ws.exp_gen[l] = trace_product(rho, mats.generators[l]).real();
  }

  ws.drho.setZero(rho.rows(), rho.cols());

  // gamma_k D[E_k] rho dt
  for (std::size_t k = 0; k < mats.errors.size(); ++k) {
    add_dissipator(ws.drho, ws.t0, ws.t1, mats.errors[k], mats.errors_dag[k],
                   mats.err_dag_err[k], mats.error_isometry[k], rho,
                   in.gamma * mats.error_rates[k] * in.dt);
  }
  // kappa D[M_l] rho dt
  for (std::size_t l = 0; l < n_gen; ++l) {
    add_dissipator(ws.drho, ws.t0, ws.t1, mats.generators[l],
                   mats.generators[l], mats.gen_dag_gen[l],
                   mats.generator_isometry[l], rho, in.kappa * in.dt);
  }
  // sqrt(kappa eta) H[M_l] rho dW_l; M_l and rho Hermitian, so
  // rho M_l = (M_l rho)^dag and the trace is twice the expectation.
  const double sqrt_keta = std::sqrt(in.kappa * in.eta);
  for (std::size_t l = 0; l < n_gen; ++l) {
    ws.t0.noalias() = mats.generators[l] * rho;
    ws.t1 = ws.t0 + ws.t0.adjoint();
    ws.drho += (sqrt_keta * dw[l]) * (ws.t1 - (2.0 * ws.exp_gen[l]) * rho);
  }
  // -i lambda G_k [F_k, rho] dt
  for (std::size_t k = 0; k < mats.feedbacks.size(); ++k) {
    if (in.feedback[k] == 0.0) continue;
    ws.t0.noalias() = mats.feedbacks[k] * rho;
    ws.t1.noalias() = rho * mats.feedbacks[k];
    ws.drho +=
        (kMinusI * (in.lambda_max * in.feedback[k] * in.dt)) * (ws.t0 - ws.t1);
  }

  rho += ws.drho;
  renormalize(rho);

  // Populations must stay near-positive; a strongly negative diagonal is the
  // cheap per-step symptom of dt too coarse for the Euler scheme.
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    if (rho(i, i).real() < -1e-3) {
      throw NumericalError(
          "density matrix positivity violated (diagonal below -1e-3); "
          "decrease dt");
    }
  }

  StepRecord rec;
  rec.dq.resize(n_gen);
  const double sqrt_kappa = std::sqrt(in.kappa);
  const double signal = 2.0 * in.kappa * std::sqrt(in.eta) * in.dt;
  for (std::size_t l = 0; l < n_gen; ++l) {
    rec.dq[l] = signal * ws.exp_gen[l] + sqrt_kappa * dw[l];
  }
  return rec;
}

StepRecord sme_step(Matrix& rho, const CodeMatrices& mats,
                    TrajectoryNoise& noise, const StepInput& in) {
  std::vector<double> dw(mats.generators.size());
  for (std::size_t l = 0; l < mats.generators.size(); ++l) {
    dw[l] = noise.measurement[l].wiener(in.dt);
  }
  StepWorkspace ws(mats);
  return sme_step(rho, mats, in, dw, ws);
}

double min_eigenvalue(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (rho + rho.adjoint()),
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace cqec
