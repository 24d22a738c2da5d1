// Copyright 2026 The Tritangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for a fixed three-qubit system (dims 2/4/8):
 * tensor products, partial trace/transpose, Hermitian eigendecomposition,
 * PSD matrix square root and trace norm.
 *
 * Qubits are labeled 1..3 with qubit 1 the most significant bit of a basis
 * index, i.e. basis state |q1 q2 q3> has index 4*q1 + 2*q2 + q3.
 */

#pragma once

#include <complex>
#include <set>

#include <Eigen/Dense>

namespace tritangle {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// The system is permanently three qubits; nothing above 8x8 is supported.
inline constexpr int kDim = 8;
inline constexpr int kQubits = 3;

/// Bit value of qubit `qubit` (1..3) inside basis index `basis`.
inline int bit_of(int basis, int qubit) { return (basis >> (kQubits - qubit)) & 1; }

/// Bit mask selecting qubit `qubit` in a basis index.
inline int mask_of(int qubit) { return 1 << (kQubits - qubit); }

/// Throws ValidationError unless `qubit` is 1, 2 or 3.
void require_qubit(int qubit);

bool is_hermitian(const Matrix &m, double tol = 1e-12);

/// Kronecker product (row-major blocks). Refuses results above 8x8.
Matrix tensor(const Matrix &a, const Matrix &b);
Matrix tensor(const Matrix &a, const Matrix &b, const Matrix &c);

/// Reduced density matrix over the kept qubits, in qubit order. The keep
/// set must be a nonempty strict subset of {1,2,3}; trace is preserved.
Matrix partial_trace(const Matrix &rho, const std::set<int> &keep);

/// Transpose of the chosen qubit's indices. An involution; preserves the
/// trace and Hermiticity exactly.
Matrix partial_transpose(const Matrix &rho, int part);

/// Eigensystem of a Hermitian matrix, eigenvalues sorted descending with
/// eigenvectors as the matching columns.
struct EigSystem {
    Eigen::VectorXd values;
    Matrix vectors;
};

/// Requires Hermiticity within 1e-10 and guarantees reconstruction
/// max|V L V^dag - M| <= 1e-9.
EigSystem herm_eig(const Matrix &m);

/// PSD square root. Eigenvalues in [-1e-10, 0) are clipped to zero; anything
/// below that tolerance is a NumericalError naming the offending eigenvalue.
Matrix sqrtm_psd(const Matrix &m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Matrix &m);

} // namespace tritangle
