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

// Shared generators for property-style tests. Everything is seeded so
// failures replay deterministically.

#pragma once

#include <set>

#include "tritangle/linalg.hpp"
#include "tritangle/pauli.hpp"
#include "tritangle/rng.hpp"

namespace tritangle::testing {

inline Matrix random_matrix(Rng &rng, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = Cplx(rng.gaussian(), rng.gaussian());
        }
    }
    return m;
}

inline Matrix random_hermitian(Rng &rng, int n) {
    const Matrix m = random_matrix(rng, n);
    return 0.5 * (m + m.adjoint().eval());
}

inline Vector random_state(Rng &rng) {
    Vector psi(kDim);
    for (int i = 0; i < kDim; ++i) {
        psi(i) = Cplx(rng.gaussian(), rng.gaussian());
    }
    psi /= psi.norm();
    return psi;
}

/// Full-rank random density matrix (mixture of eight random pure states).
inline Matrix random_density(Rng &rng) {
    Matrix rho = Matrix::Zero(kDim, kDim);
    double total = 0.0;
    for (int k = 0; k < kDim; ++k) {
        const Vector psi = random_state(rng);
        const double w = rng.uniform() + 1e-3;
        rho += w * (psi * psi.adjoint());
        total += w;
    }
    return rho / total;
}

inline Gate random_gate(Rng &rng) {
    if (rng.uniform() < 0.4) {
        int control = 1 + static_cast<int>(rng.uniform() * 3);
        int target = 1 + static_cast<int>(rng.uniform() * 3);
        while (target == control) {
            target = 1 + static_cast<int>(rng.uniform() * 3);
        }
        return Gate::cnot(control, target);
    }
    const char axis = rng.uniform() < 0.5 ? 'x' : 'y';
    const int sign = rng.uniform() < 0.5 ? +1 : -1;
    const int qubit = 1 + static_cast<int>(rng.uniform() * 3);
    const bool pi = rng.uniform() < 0.25;
    return Gate::rotation(axis, sign, qubit, pi);
}

inline Circuit random_circuit(Rng &rng, int max_gates = 6) {
    Circuit c;
    const int n = static_cast<int>(rng.uniform() * (max_gates + 1));
    for (int i = 0; i < n; ++i) {
        c.gates.push_back(random_gate(rng));
    }
    return c;
}

} // namespace tritangle::testing
