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

#include "tritangle/classifier.hpp"

#include <cmath>
#include <sstream>

#include "tritangle/errors.hpp"
#include "tritangle/mapping.hpp"
#include "tritangle/rng.hpp"

namespace tritangle {

const char *to_label(StateClass c) {
    switch (c) {
    case StateClass::GHZ:
        return "GHZ";
    case StateClass::W:
        return "W";
    case StateClass::BS1:
        return "BS1";
    case StateClass::BS2:
        return "BS2";
    case StateClass::BS3:
        return "BS3";
    case StateClass::Separable:
        return "Separable";
    case StateClass::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

ClassificationResult classify(const std::array<double, 4> &values, double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ValidationError("epsilon must be a positive finite threshold");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ValidationError("observable values must be finite");
        }
        if (std::abs(v) > 1.0 + epsilon) {
            std::ostringstream msg;
            msg << "observable value " << v << " lies outside [-1-eps, 1+eps]";
            throw ValidationError(msg.str());
        }
    }

    ClassificationResult res;
    res.values = values;
    res.epsilon = epsilon;
    for (int j = 0; j < 4; ++j) {
        res.nonzero[j] = std::abs(values[j]) > epsilon;
    }

    if (res.nonzero[0]) {
        res.label = StateClass::GHZ; // <O> != 0 dominates; O1..O3 are wildcards
        return res;
    }
    const int count = res.nonzero[1] + res.nonzero[2] + res.nonzero[3];
    if (count == 3) {
        res.label = StateClass::W;
    } else if (count == 0) {
        res.label = StateClass::Separable;
    } else if (count == 1) {
        if (res.nonzero[3]) {
            res.label = StateClass::BS1;
        } else if (res.nonzero[2]) {
            res.label = StateClass::BS2;
        } else {
            res.label = StateClass::BS3;
        }
    } else {
        res.label = StateClass::Inconclusive; // two nonzero: no decision row
    }
    return res;
}

StateClassification classify_state(const Vector &psi, double epsilon,
                                   const MeasurementConfig &cfg) {
    std::array<double, 4> values{};
    if (cfg.mode == MeasurementConfig::Mode::Exact) {
        values = protocol_expectations(psi);
    } else {
        const Matrix rho = apply_noise(psi, cfg.noise);
        for (std::size_t j = 0; j < kProtocolIndices.size(); ++j) {
            const int index = kProtocolIndices[j];
            values[j] =
                sample_expectation(rho, index, cfg.shots, derive_seed(cfg.seed, index), cfg.noise)
                    .mean;
        }
    }
    return StateClassification{classify(values, epsilon), cfg};
}

nlohmann::json classification_to_json(const StateClassification &sc) {
    const ClassificationResult &r = sc.result;
    nlohmann::json provenance;
    if (sc.config.mode == MeasurementConfig::Mode::Exact) {
        provenance = "exact";
    } else {
        provenance = nlohmann::json{
            {"shots", sc.config.shots},
            {"seed", sc.config.seed},
            {"noise",
             {{"depolarizing_p", sc.config.noise.depolarizing_p},
              {"readout_sigma", sc.config.noise.readout_sigma}}},
        };
    }
    return nlohmann::json{
        {"values", {{"O", r.values[0]}, {"O1", r.values[1]}, {"O2", r.values[2]}, {"O3", r.values[3]}}},
        {"epsilon", r.epsilon},
        {"nonzero", r.nonzero},
        {"label", to_label(r.label)},
        {"provenance", provenance},
    };
}

} // namespace tritangle
