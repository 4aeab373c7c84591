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

#include "cqec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cqec {

namespace {

constexpr Complex kI{0.0, 1.0};

bool valid_phase(Complex p) {
  const Complex allowed[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const auto& a : allowed) {
    if (std::abs(p - a) < 1e-15) return true;
  }
  return false;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

const Matrix& pauli_letter(char letter) {
  static const Matrix id = Matrix::Identity(2, 2);
  static const Matrix x = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  static const Matrix y = (Matrix(2, 2) << 0, -kI, kI, 0).finished();
  static const Matrix z = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  switch (letter) {
    case 'I': return id;
    case 'X': return x;
    case 'Y': return y;
    case 'Z': return z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                  letter + "' (expected I, X, Y or Z)");
  }
}

Matrix pauli_matrix(const PauliString& p) {
  if (p.label.empty()) throw std::invalid_argument("empty Pauli label");
  if (!valid_phase(p.phase)) {
    throw std::invalid_argument("Pauli phase must be one of +1, -1, +i, -i");
  }
  Matrix out = p.phase * pauli_letter(p.label.front());
  for (std::size_t q = 1; q < p.label.size(); ++q) {
    out = kron(out, pauli_letter(p.label[q]));
  }
  return out;
}

Matrix pauli_matrix(std::string_view label, Complex phase) {
  return pauli_matrix(PauliString{label, phase});
}

Vector basis_state(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

double check_residue(Complex value) {
  if (std::abs(value.imag()) >= tol::kImagResidue) {
    throw NumericalError("expectation value has imaginary residue " +
                         std::to_string(value.imag()));
  }
  return value.real();
}

void check_hermitian_operand(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("expectation: operator must be square");
  }
  if (hermiticity_defect(a) > tol::kHermiticity) {
    throw std::invalid_argument("expectation: operator is not Hermitian");
  }
}

}  // namespace

double expectation(const Matrix& a, const Vector& psi) {
  check_hermitian_operand(a);
  if (a.cols() != psi.size()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  return check_residue(psi.dot(a * psi));
}

double expectation(const Matrix& a, const Matrix& rho) {
  check_hermitian_operand(a);
  if (a.cols() != rho.rows() || rho.rows() != rho.cols()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  // tr(rho A) without forming the product.
  return check_residue((rho.transpose().cwiseProduct(a)).sum());
}

namespace {

double clamp_fidelity(double f) { return std::clamp(f, 0.0, 1.0); }

}  // namespace

double codeword_fidelity(const Vector& psi0, const Vector& psi) {
  if (psi0.size() != psi.size()) {
    throw std::invalid_argument("codeword_fidelity: dimension mismatch");
  }
  return clamp_fidelity(std::norm(psi0.dot(psi)));
}

double codeword_fidelity(const Vector& psi0, const Matrix& rho) {
  if (psi0.size() != rho.rows() || rho.rows() != rho.cols()) {
    throw std::invalid_argument("codeword_fidelity: dimension mismatch");
  }
  return clamp_fidelity((psi0.dot(rho * psi0)).real());
}

void normalize(Vector& psi) {
  const double n = psi.norm();
  if (n <= tol::kDegenerate) {
    throw DegenerateStateError("state norm collapsed to " + std::to_string(n));
  }
  psi /= n;
}

void renormalize(Matrix& rho) {
  const double tr = rho.trace().real();
  if (tr <= tol::kDegenerate) {
    throw DegenerateStateError("density matrix trace collapsed to " +
                               std::to_string(tr));
  }
  rho /= tr;
}

}  // namespace cqec
