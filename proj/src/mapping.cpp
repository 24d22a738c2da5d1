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

#include "tritangle/mapping.hpp"

#include <sstream>

#include "tritangle/errors.hpp"

namespace tritangle {

namespace {

// Circuit texts U_1..U_63 in written product order (rightmost gate acts on
// the state first). Index 0 is unused padding.
constexpr const char *kCircuitTable[64] = {
    nullptr,
    "Yb3",                        // 1  IIx
    "X3",                         // 2  IIy
    "",                           // 3  IIz
    "Yb2",                        // 4  IxI
    "CNOT23 Yb3 Yb2",             // 5  Ixx
    "CNOT23 X3 Yb2",              // 6  Ixy
    "CNOT23 Yb2",                 // 7  Ixz
    "X2",                         // 8  IyI
    "CNOT23 Yb3 X2",              // 9  Iyx
    "CNOT23 X3 X2",               // 10 Iyy
    "CNOT23 X2",                  // 11 Iyz
    "",                           // 12 IzI
    "CNOT23 Yb3",                 // 13 Izx
    "CNOT23 X3",                  // 14 Izy
    "CNOT23",                     // 15 Izz
    "X1",                         // 16 xII (published; corrected below)
    "CNOT13 Yb3 Yb1",             // 17 xIx
    "CNOT13 X3 Yb1",              // 18 xIy
    "CNOT13 Yb1",                 // 19 xIz
    "CNOT12 Yb2 Yb1",             // 20 xxI
    "CNOT23 Yb3 CNOT12 Yb2 Yb1",  // 21 xxx
    "CNOT23 X3 CNOT12 Yb2 Yb1",   // 22 xxy
    "CNOT23 CNOT12 Yb2 Yb1",      // 23 xxz
    "CNOT12 X2 Yb1",              // 24 xyI
    "CNOT23 Yb3 CNOT12 X2 Yb1",   // 25 xyx
    "CNOT23 X3 CNOT12 X2 Yb1",    // 26 xyy
    "CNOT23 CNOT12 X2 Yb1",       // 27 xyz
    "CNOT12 Yb1",                 // 28 xzI
    "CNOT23 Yb3 CNOT12 Yb1",      // 29 xzx
    "CNOT23 X3 CNOT12 Yb1",       // 30 xzy
    "CNOT12 CNOT23 Yb1",          // 31 xzz (published; corrected below)
    "X1",                         // 32 yII
    "CNOT13 Yb3 X1",              // 33 yIx
    "CNOT13 X3 X1",               // 34 yIy
    "CNOT13 X1",                  // 35 yIz
    "CNOT12 Yb2 X1",              // 36 yxI
    "CNOT23 Yb3 CNOT12 Yb2 X1",   // 37 yxx
    "CNOT23 X3 CNOT12 Yb2 X1",    // 38 yxy
    "CNOT23 CNOT12 Yb2 X1",       // 39 yxz
    "CNOT12 X2 X1",               // 40 yyI
    "CNOT23 Yb3 CNOT12 X2 X1",    // 41 yyx
    "CNOT23 X3 CNOT12 X2 X1",     // 42 yyy
    "CNOT23 CNOT12 X2 X1",        // 43 yyz
    "CNOT12 X1",                  // 44 yzI
    "CNOT23 Yb3 CNOT12 X1",       // 45 yzx
    "CNOT23 X3 CNOT12 X1",        // 46 yzy
    "CNOT23 CNOT12 X1",           // 47 yzz
    "",                           // 48 zII
    "CNOT13 Yb3",                 // 49 zIx
    "CNOT13 X3",                  // 50 zIy
    "CNOT13",                     // 51 zIz
    "CNOT12 Yb2",                 // 52 zxI
    "CNOT23 Yb3 CNOT12 Yb2",      // 53 zxx
    "CNOT23 X3 CNOT12 Yb2",       // 54 zxy
    "CNOT23 CNOT12 Yb2",          // 55 zxz
    "CNOT12 X2",                  // 56 zyI
    "CNOT23 Yb3 CNOT12 X2",       // 57 zyx
    "CNOT23 X3 CNOT12 X2",        // 58 zyy
    "CNOT23 CNOT12 X2",           // 59 zyz
    "CNOT12",                     // 60 zzI
    "CNOT23 Yb3 CNOT12",          // 61 zzx
    "CNOT23 X3 CNOT12",           // 62 zzy
    "CNOT23 CNOT12",              // 63 zzz
};

struct Correction {
    int index;
    const char *circuit;
};

constexpr Correction kCorrections[] = {
    {16, "Yb1"},
    {31, "CNOT23 CNOT12 Yb1"},
};

int highest_acted_qubit(const PauliString &p) {
    for (int q = kQubits; q >= 1; --q) {
        if (p.letters[q - 1] != PauliAxis::I) {
            return q;
        }
    }
    return 0;
}

std::vector<MappingRecipe> build_table() {
    std::vector<MappingRecipe> table;
    table.reserve(63);
    for (int i = 1; i <= 63; ++i) {
        MappingRecipe r;
        r.index = i;
        r.pauli = PauliString::from_index(i);
        r.measured = highest_acted_qubit(r.pauli);
        const char *corrected = nullptr;
        for (const Correction &c : kCorrections) {
            if (c.index == i) {
                corrected = c.circuit;
            }
        }
        if (corrected) {
            r.circuit = parse_circuit(corrected);
            r.published = parse_circuit(kCircuitTable[i]);
            r.provenance = Provenance::Corrected;
        } else {
            r.circuit = parse_circuit(kCircuitTable[i]);
            r.provenance = Provenance::Published;
        }
        const RecipeCheck check = verify_recipe(r);
        if (!check.ok) {
            std::ostringstream msg;
            msg << "mapping recipe " << i << " failed verification: circuit '"
                << circuit_text(r.circuit) << "' measuring qubit " << r.measured << " produces "
                << (check.produced_sign < 0 ? "-" : "") << check.produced.str() << ", not "
                << r.pauli.str();
            throw NumericalError(msg.str());
        }
        r.sign = check.sign;
        table.push_back(std::move(r));
    }
    return table;
}

} // namespace

const std::vector<MappingRecipe> &recipe_table() {
    static const std::vector<MappingRecipe> table = build_table();
    return table;
}

RecipeCheck verify_recipe(const MappingRecipe &r) {
    require_qubit(r.measured);
    PauliString z_on_measured;
    z_on_measured.letters[r.measured - 1] = PauliAxis::Z;

    const Matrix u = circuit_unitary(r.circuit);
    const Matrix conjugated = u.adjoint() * pauli_matrix(z_on_measured) * u;

    const Matrix target = pauli_matrix(r.pauli);
    const double dev_plus = (conjugated - target).cwiseAbs().maxCoeff();
    const double dev_minus = (conjugated + target).cwiseAbs().maxCoeff();

    RecipeCheck check;
    if (dev_plus <= 1e-10 || dev_minus <= 1e-10) {
        check.ok = true;
        check.sign = dev_plus <= dev_minus ? +1 : -1;
        check.max_deviation = std::min(dev_plus, dev_minus);
        check.produced = r.pauli;
        check.produced_sign = check.sign;
        return check;
    }

    // Mismatch: name the Pauli string the circuit actually maps to.
    check.ok = false;
    check.sign = 0;
    double best = dev_plus;
    check.produced = r.pauli;
    check.produced_sign = +1;
    for (int i = 0; i < 64; ++i) {
        const Matrix candidate = pauli_matrix(PauliString::from_index(i));
        const double dp = (conjugated - candidate).cwiseAbs().maxCoeff();
        const double dm = (conjugated + candidate).cwiseAbs().maxCoeff();
        if (dp < best) {
            best = dp;
            check.produced = PauliString::from_index(i);
            check.produced_sign = +1;
        }
        if (dm < best) {
            best = dm;
            check.produced = PauliString::from_index(i);
            check.produced_sign = -1;
        }
    }
    check.max_deviation = best;
    return check;
}

double expectation_via_mapping(const Vector &psi, int index) {
    if (index == 0) {
        throw ValidationError("index 0 is the identity; its expectation is 1 and has no mapping circuit");
    }
    if (index < 1 || index > 63) {
        throw ValidationError("Pauli index must be in 1..63; got " + std::to_string(index));
    }
    const MappingRecipe &r = recipe_table()[index - 1];
    const Vector mapped = apply(r.circuit, psi);
    double z = 0.0;
    for (int j = 0; j < kDim; ++j) {
        const double p = std::norm(mapped(j));
        z += bit_of(j, r.measured) ? -p : p;
    }
    return r.sign * z;
}

std::array<double, 4> protocol_expectations(const Vector &psi) {
    std::array<double, 4> out{};
    for (std::size_t j = 0; j < kProtocolIndices.size(); ++j) {
        out[j] = expectation_via_mapping(psi, kProtocolIndices[j]);
    }
    return out;
}

std::array<double, 4> protocol_expectations(const Matrix &rho) {
    std::array<double, 4> out{};
    for (std::size_t j = 0; j < kProtocolIndices.size(); ++j) {
        out[j] = expectation(rho, PauliString::from_index(kProtocolIndices[j]));
    }
    return out;
}

nlohmann::json verification_report() {
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json corrected = nlohmann::json::array();
    for (const MappingRecipe &r : recipe_table()) {
        const RecipeCheck check = verify_recipe(r);
        nlohmann::json row{
            {"index", r.index},
            {"pauli", r.pauli.str()},
            {"circuit", circuit_text(r.circuit)},
            {"measured_qubit", r.measured},
            {"sign", check.sign},
            {"max_deviation", check.max_deviation},
            {"provenance", r.provenance == Provenance::Corrected ? "corrected" : "published"},
        };
        if (r.published) {
            MappingRecipe published_variant = r;
            published_variant.circuit = *r.published;
            const RecipeCheck as_published = verify_recipe(published_variant);
            row["published_circuit"] = circuit_text(*r.published);
            row["published_produces"] =
                (as_published.produced_sign < 0 ? "-" : "") + as_published.produced.str();
            corrected.push_back(r.index);
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{
        {"total", rows.size()},
        {"corrected_indices", corrected},
        {"rows", rows},
    };
}

} // namespace tritangle
