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

#include "tritangle/states.hpp"

#include <cmath>
#include <sstream>

#include "tritangle/errors.hpp"
#include "tritangle/rng.hpp"

namespace tritangle {

void CanonicalParams::validate() const {
    const double amps[5] = {a0, a1, a2, a3, a4};
    const char *names[5] = {"a0", "a1", "a2", "a3", "a4"};
    double sumsq = 0.0;
    for (int i = 0; i < 5; ++i) {
        if (!(amps[i] >= 0.0)) {
            throw ValidationError(std::string("canonical.") + names[i] + ": amplitude must be nonnegative");
        }
        sumsq += amps[i] * amps[i];
    }
    if (std::abs(sumsq - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "canonical amplitudes: squared sum " << sumsq << " deviates from 1 by more than 1e-12";
        throw ValidationError(msg.str());
    }
    if (!(theta >= 0.0 && theta <= M_PI)) {
        throw ValidationError("canonical.theta: must lie in [0, pi]");
    }
}

const char *to_label(NamedState n) {
    switch (n) {
    case NamedState::GHZ:
        return "GHZ";
    case NamedState::W:
        return "W";
    case NamedState::WWbar:
        return "WWbar";
    case NamedState::BS1:
        return "BS1";
    case NamedState::BS2:
        return "BS2";
    case NamedState::BS3:
        return "BS3";
    case NamedState::Sep:
        return "Sep";
    }
    return "?";
}

std::optional<NamedState> named_state_from_label(std::string_view label) {
    for (NamedState n : {NamedState::GHZ, NamedState::W, NamedState::WWbar, NamedState::BS1,
                         NamedState::BS2, NamedState::BS3, NamedState::Sep}) {
        if (label == to_label(n)) {
            return n;
        }
    }
    return std::nullopt;
}

Vector from_canonical(const CanonicalParams &p) {
    p.validate();
    Vector psi = Vector::Zero(kDim);
    psi(0) = p.a0;                                                     // |000>
    psi(4) = p.a1 * Cplx(std::cos(p.theta), std::sin(p.theta));        // |100>
    psi(5) = p.a2;                                                     // |101>
    psi(6) = p.a3;                                                     // |110>
    psi(7) = p.a4;                                                     // |111>
    return psi;
}

Vector named_state(NamedState n) {
    Vector psi = Vector::Zero(kDim);
    const double r2 = 1.0 / std::sqrt(2.0);
    switch (n) {
    case NamedState::GHZ:
        psi(0) = r2;
        psi(7) = r2;
        break;
    case NamedState::W:
        psi(1) = psi(2) = psi(4) = 1.0 / std::sqrt(3.0);
        break;
    case NamedState::WWbar:
        for (int i = 1; i <= 6; ++i) {
            psi(i) = 1.0 / std::sqrt(6.0);
        }
        break;
    case NamedState::BS1: // qubits 2,3 entangled
        psi(0) = r2;
        psi(3) = r2;
        break;
    case NamedState::BS2: // qubits 1,3 entangled
        psi(0) = r2;
        psi(5) = r2;
        break;
    case NamedState::BS3: // qubits 1,2 entangled
        psi(0) = r2;
        psi(6) = r2;
        break;
    case NamedState::Sep:
        psi(0) = 1.0;
        break;
    }
    return psi;
}

CanonicalParams random_canonical(std::uint64_t seed) {
    Rng rng(seed);
    double g[5];
    double norm = 0.0;
    for (double &v : g) {
        v = std::abs(rng.gaussian());
        norm += v * v;
    }
    norm = std::sqrt(norm);
    CanonicalParams p;
    p.a0 = g[0] / norm;
    p.a1 = g[1] / norm;
    p.a2 = g[2] / norm;
    p.a3 = g[3] / norm;
    p.a4 = g[4] / norm;
    p.theta = rng.uniform(0.0, M_PI);
    // Renormalize exactly so the 1e-12 invariant holds regardless of rounding.
    const double s = std::sqrt(p.a0 * p.a0 + p.a1 * p.a1 + p.a2 * p.a2 + p.a3 * p.a3 + p.a4 * p.a4);
    p.a0 /= s;
    p.a1 /= s;
    p.a2 /= s;
    p.a3 /= s;
    p.a4 /= s;
    return p;
}

Matrix to_density(const Vector &psi) {
    if (psi.size() != kDim) {
        throw ValidationError("state vector must have exactly 8 amplitudes");
    }
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "state vector norm " << norm << " deviates from 1 beyond tolerance";
        throw ValidationError(msg.str());
    }
    return psi * psi.adjoint();
}

namespace {

double require_number(const nlohmann::json &doc, const char *path) {
    if (!doc.is_number()) {
        throw ValidationError(std::string(path) + ": expected a number");
    }
    return doc.get<double>();
}

} // namespace

Vector state_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw ValidationError("state document: expected a JSON object");
    }
    if (doc.contains("named")) {
        const auto &v = doc.at("named");
        if (!v.is_string()) {
            throw ValidationError("named: expected a string label");
        }
        const auto n = named_state_from_label(v.get<std::string>());
        if (!n) {
            throw ValidationError("named: unknown label '" + v.get<std::string>() +
                                  "' (expect GHZ, W, WWbar, BS1, BS2, BS3 or Sep)");
        }
        return named_state(*n);
    }
    if (doc.contains("canonical")) {
        const auto &c = doc.at("canonical");
        if (!c.is_object()) {
            throw ValidationError("canonical: expected an object with a0..a4 and theta");
        }
        CanonicalParams p;
        double *slots[6] = {&p.a0, &p.a1, &p.a2, &p.a3, &p.a4, &p.theta};
        const char *keys[6] = {"a0", "a1", "a2", "a3", "a4", "theta"};
        for (int i = 0; i < 6; ++i) {
            if (!c.contains(keys[i])) {
                throw ValidationError(std::string("canonical.") + keys[i] + ": missing");
            }
            *slots[i] = require_number(c.at(keys[i]), (std::string("canonical.") + keys[i]).c_str());
        }
        return from_canonical(p);
    }
    if (doc.contains("amplitudes")) {
        const auto &a = doc.at("amplitudes");
        if (!a.is_array() || a.size() != 8) {
            throw ValidationError("amplitudes: expected an array of 8 [re, im] pairs");
        }
        Vector psi(kDim);
        double sumsq = 0.0;
        for (int i = 0; i < kDim; ++i) {
            const auto &entry = a.at(i);
            if (!entry.is_array() || entry.size() != 2) {
                throw ValidationError("amplitudes[" + std::to_string(i) + "]: expected a [re, im] pair");
            }
            const double re = require_number(entry.at(0), "amplitudes: re");
            const double im = require_number(entry.at(1), "amplitudes: im");
            psi(i) = Cplx(re, im);
            sumsq += re * re + im * im;
        }
        if (std::abs(sumsq - 1.0) > 1e-12) {
            std::ostringstream msg;
            msg << "amplitudes: squared norm " << sumsq << " deviates from 1 by more than 1e-12";
            throw ValidationError(msg.str());
        }
        return psi;
    }
    throw ValidationError("state document: expected one of 'named', 'canonical' or 'amplitudes'");
}

nlohmann::json state_to_json(const Vector &psi) {
    if (psi.size() != kDim) {
        throw ValidationError("state vector must have exactly 8 amplitudes");
    }
    nlohmann::json amps = nlohmann::json::array();
    for (int i = 0; i < kDim; ++i) {
        amps.push_back({psi(i).real(), psi(i).imag()});
    }
    return nlohmann::json{{"amplitudes", amps}};
}

nlohmann::json canonical_to_json(const CanonicalParams &p) {
    return nlohmann::json{{"canonical",
                           {{"a0", p.a0},
                            {"a1", p.a1},
                            {"a2", p.a2},
                            {"a3", p.a3},
                            {"a4", p.a4},
                            {"theta", p.theta}}}};
}

} // namespace tritangle
