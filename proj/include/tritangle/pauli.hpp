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
 * Three-qubit Pauli strings with base-4 indexing, the gate set used by the
 * observable-mapping circuits (pi/2 and pi local rotations about x/y, CNOT
 * on any ordered qubit pair), and circuit application to states and density
 * matrices.
 *
 * A Pauli string is written as three letters over {I,x,y,z}, qubit 1 first,
 * and carries the index 16*d1 + 4*d2 + d3 with I->0, x->1, y->2, z->3.
 *
 * Circuit text form: whitespace-separated gate tokens, e.g.
 * "CNOT23 Yb3 CNOT12 Yb1". The token order is the written product order:
 * the RIGHTMOST token acts on the state first (and the leftmost conjugates
 * sigma first in U^dag sigma U). Rotation tokens are X/Xb/Y/Yb for the pi/2
 * rotations exp(-i s pi/4 sigma) with s=+1 (no bar) or s=-1 (bar), followed
 * by an optional "pi" for the squared (pi) rotation and the qubit digit.
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tritangle/linalg.hpp"

namespace tritangle {

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct PauliString {
    std::array<PauliAxis, 3> letters{PauliAxis::I, PauliAxis::I, PauliAxis::I};

    int index() const;
    static PauliString from_index(int index);
    /// Parses three letters over {I,x,y,z}, e.g. "xzx" or "IIz".
    static PauliString from_letters(std::string_view text);
    std::string str() const;

    bool operator==(const PauliString &) const = default;
};

struct Gate {
    enum class Kind { Rotation, Cnot };
    Kind kind = Kind::Rotation;
    // Rotation fields: exp(-i * sign * angle * sigma_axis) on `qubit`,
    // with angle = pi/4 (default) or pi/2 when `pi` is set.
    int qubit = 0;
    char axis = 'x'; // 'x' or 'y'
    int sign = +1;
    bool pi = false;
    // CNOT fields.
    int control = 0;
    int target = 0;

    static Gate rotation(char axis, int sign, int qubit, bool pi = false);
    static Gate cnot(int control, int target);

    bool operator==(const Gate &) const = default;
};

/// Gates are stored in application order: gates.front() acts on the state
/// first. An empty circuit is the identity.
struct Circuit {
    std::vector<Gate> gates;

    bool operator==(const Circuit &) const = default;
};

/// Single-qubit Pauli/identity factor as a 2x2 matrix.
const Matrix &pauli1(PauliAxis axis);

/// 8x8 tensor product of the string's single-qubit factors.
Matrix pauli_matrix(const PauliString &p);

Matrix gate_matrix(const Gate &g);

/// Matrix product of the circuit's gates, last-applied leftmost.
Matrix circuit_unitary(const Circuit &c);

Vector apply(const Circuit &c, const Vector &psi);
Matrix apply_dm(const Circuit &c, const Matrix &rho);

/// Action of a Pauli string on amplitudes, without building the 8x8 matrix.
Vector apply_pauli(const PauliString &p, const Vector &psi);

/// <psi|P|psi> via amplitude-level action. The imaginary part must vanish
/// within 1e-10 and is discarded.
double expectation(const Vector &psi, const PauliString &p);

/// Re Tr(rho P) via the matrix route.
double expectation(const Matrix &rho, const PauliString &p);

Circuit parse_circuit(std::string_view text);
std::string circuit_text(const Circuit &c);

} // namespace tritangle
