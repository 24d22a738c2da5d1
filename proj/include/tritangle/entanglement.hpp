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
 * Entanglement quantifiers: Wootters concurrence, pure-state bipartite
 * concurrence, the three-tangle, minimum-bipartition negativity and the
 * Uhlmann fidelity.
 */

#pragma once

#include "tritangle/linalg.hpp"

namespace tritangle {

/// Squared concurrences of the 1|23, 12 and 13 splits and their residual
/// tau = c2_a_bc - c2_ab - c2_ac (clipped to zero within -1e-8).
struct TangleReport {
    double c2_a_bc = 0.0;
    double c2_ab = 0.0;
    double c2_ac = 0.0;
    double tau = 0.0;
};

/// Wootters concurrence of a two-qubit density matrix:
/// max(0, l1-l2-l3-l4) with l_i the descending square roots of the
/// eigenvalues of rho (sy x sy) rho* (sy x sy).
double concurrence_2q(const Matrix &rho4);

/// 2 sqrt(det rho_part) for a pure three-qubit state split part|rest.
double concurrence_pure_bipartite(const Vector &psi, int part);

TangleReport three_tangle(const Vector &psi);

/// Minimum over the three single-qubit bipartitions of
/// (||rho^{T_k}||_1 - 1) / 2, clamped at zero.
double negativity_min(const Vector &psi);
double negativity_min(const Matrix &rho);

/// Uhlmann fidelity [Tr sqrt(sqrt(a) b sqrt(a))]^2 in [0, 1].
double fidelity(const Matrix &a, const Matrix &b);

} // namespace tritangle
