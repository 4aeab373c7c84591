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

#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "cqec/errors.hpp"

namespace cqec {

using Complex = std::complex<double>;
/// Dense operator on a 2^n dimensional Hilbert space. Also used for density
/// matrices (unit trace, Hermitian).
using Matrix = Eigen::MatrixXcd;
/// Pure state amplitudes in the computational basis.
using Vector = Eigen::VectorXcd;

namespace tol {
inline constexpr double kHermiticity = 1e-9;
inline constexpr double kImagResidue = 1e-6;
inline constexpr double kDegenerate = 1e-12;
inline constexpr double kUnit = 1e-9;
}  // namespace tol

/// Symbolic n-qubit Pauli operator, e.g. {"ZZI", +1}. Qubit 1 is the leftmost
/// letter and the most significant bit of the computational basis index.
struct PauliString {
  std::string label;         // sequence over {I, X, Y, Z}
  Complex phase{1.0, 0.0};   // one of +1, -1, +i, -i

  PauliString() = default;
  PauliString(std::string_view l, Complex p = Complex{1.0, 0.0})
      : label(l), phase(p) {}

  int n_qubits() const { return static_cast<int>(label.size()); }
};

/// Kronecker product, a as the most significant factor.
Matrix kron(const Matrix& a, const Matrix& b);

/// Single-qubit Pauli matrix for letter in {I, X, Y, Z}.
const Matrix& pauli_letter(char letter);

/// Dense 2^n x 2^n realization of a Pauli string (phase included).
Matrix pauli_matrix(const PauliString& p);
Matrix pauli_matrix(std::string_view label, Complex phase = Complex{1.0, 0.0});

/// Computational basis state |index> in dimension dim.
Vector basis_state(Eigen::Index dim, Eigen::Index index);

/// max_ij |A - A^dag|_ij
double hermiticity_defect(const Matrix& a);

/// <psi|A|psi> resp. tr(rho A) for Hermitian A. Throws std::invalid_argument
/// on dimension mismatch or non-Hermitian A; NumericalError if the imaginary
/// residue exceeds tol::kImagResidue.
double expectation(const Matrix& a, const Vector& psi);
double expectation(const Matrix& a, const Matrix& rho);

/// |<psi0|psi>|^2 resp. <psi0|rho|psi0>, clamped to [0, 1].
double codeword_fidelity(const Vector& psi0, const Vector& psi);
double codeword_fidelity(const Vector& psi0, const Matrix& rho);

/// Rescale to unit norm / unit trace in place. Throws DegenerateStateError
/// when the norm (trace) has collapsed below tol::kDegenerate.
void normalize(Vector& psi);
void renormalize(Matrix& rho);

}  // namespace cqec
