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
 * The observable-mapping machinery: every nonidentity three-qubit Pauli
 * string B_i (1 <= i <= 63) carries a small gate circuit U_i and a measured
 * qubit k such that
 *
 *     U_i^dag sigma_kz U_i = sign * B_i        (sign is +1 for every row),
 *
 * so <B_i> in a state rho equals sign * <sigma_kz> in U_i rho U_i^dag.
 * Every recipe is verified by brute-force 8x8 conjugation when the table is
 * first built; a failing row is a fatal construction error.
 *
 * Two rows of the published table do not verify under the fixed rotation
 * conventions and are shipped in corrected form (provenance "corrected"),
 * with the published variant retained for the verification report:
 *   - row 16: published X1 conjugates sigma_1z to sigma_1y, not sigma_1x;
 *     corrected circuit is Yb1.
 *   - row 31: published CNOT12.CNOT23.Yb1 produces Izz; the CNOTs must be
 *     ordered CNOT23.CNOT12 for the qubit-1 factor to propagate.
 */

#pragma once

#include <array>
#include <optional>
#include <vector>

#include <json.hpp>

#include "tritangle/pauli.hpp"

namespace tritangle {

/// Protocol observables O, O1, O2, O3 as Pauli indices.
inline constexpr std::array<int, 4> kProtocolIndices{21, 23, 29, 53};

enum class Provenance { Published, Corrected };

struct MappingRecipe {
    int index = 0;           // 1..63
    PauliString pauli;       // B_index
    Circuit circuit;         // U_index
    int measured = 0;        // qubit whose sigma_z is read after mapping
    int sign = +1;           // filled by verification
    Provenance provenance = Provenance::Published;
    std::optional<Circuit> published; // only for corrected rows
};

/// Outcome of brute-force conjugation of sigma_kz by the recipe circuit.
/// When the result is not +-B_i, `produced` names the operator it is.
struct RecipeCheck {
    bool ok = false;
    int sign = 0;
    double max_deviation = 0.0;
    PauliString produced;
    int produced_sign = 0;
};

/// The 63 recipes, verified once at first use and immutable thereafter.
const std::vector<MappingRecipe> &recipe_table();

RecipeCheck verify_recipe(const MappingRecipe &r);

/// sign * <sigma_kz> on the circuit-mapped state; equals the direct Pauli
/// expectation within 1e-10. Index 0 (identity) is refused.
double expectation_via_mapping(const Vector &psi, int index);

/// The protocol tuple (<O>, <O1>, <O2>, <O3>) via the mapped measurements.
std::array<double, 4> protocol_expectations(const Vector &psi);

/// Same tuple evaluated on a density matrix via Tr(rho B_i).
std::array<double, 4> protocol_expectations(const Matrix &rho);

/// Machine-readable verification document: one row per index with circuit
/// text, measured qubit, sign, deviation and provenance; corrected rows also
/// carry the published circuit and the operator it actually produces.
nlohmann::json verification_report();

} // namespace tritangle
