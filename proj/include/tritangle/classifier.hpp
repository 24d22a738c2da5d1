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
 * Decision procedure mapping the four protocol expectations
 * (<O>, <O1>, <O2>, <O3>) to one of the six SLOCC classes.
 *
 * With the nonzero test |v| > epsilon:
 *   <O> nonzero                      -> GHZ (others ignored)
 *   all of <O1>,<O2>,<O3> nonzero    -> W
 *   only <O3> / only <O2> / only <O1> -> BS1 / BS2 / BS3
 *   none nonzero                     -> Separable
 *   exactly two nonzero              -> Inconclusive (no such pattern exists
 *                                       for exact pure-state values)
 */

#pragma once

#include <array>
#include <cstdint>

#include <json.hpp>

#include "tritangle/linalg.hpp"
#include "tritangle/measurement.hpp"

namespace tritangle {

enum class StateClass { GHZ, W, BS1, BS2, BS3, Separable, Inconclusive };

const char *to_label(StateClass c);

struct ClassificationResult {
    std::array<double, 4> values{};  // <O>, <O1>, <O2>, <O3>
    double epsilon = 0.0;
    std::array<bool, 4> nonzero{};
    StateClass label = StateClass::Inconclusive;
};

ClassificationResult classify(const std::array<double, 4> &values, double epsilon);

struct MeasurementConfig {
    enum class Mode { Exact, Sampled };
    Mode mode = Mode::Exact;
    long shots = 10000;
    std::uint64_t seed = 0;
    NoiseModel noise{};
};

/// Classification plus the measurement path that produced the values.
struct StateClassification {
    ClassificationResult result;
    MeasurementConfig config;
};

StateClassification classify_state(const Vector &psi, double epsilon,
                                   const MeasurementConfig &cfg = {});

nlohmann::json classification_to_json(const StateClassification &sc);

} // namespace tritangle
