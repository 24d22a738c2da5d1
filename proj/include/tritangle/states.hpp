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
 * Three-qubit pure state construction: the canonical five-parameter family
 *   a0|000> + a1 e^{i theta}|100> + a2|101> + a3|110> + a4|111>,
 * the seven named representative states, seeded random generic states, and
 * the JSON state-description documents consumed by the CLI.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "tritangle/linalg.hpp"

namespace tritangle {

struct CanonicalParams {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    double theta = 0.0;

    /// All amplitudes nonnegative, squared sum 1 within 1e-12, theta in [0, pi].
    void validate() const;
};

enum class NamedState { GHZ, W, WWbar, BS1, BS2, BS3, Sep };

const char *to_label(NamedState n);
std::optional<NamedState> named_state_from_label(std::string_view label);

Vector from_canonical(const CanonicalParams &p);

Vector named_state(NamedState n);

/// Deterministic generic state parameters: five normalized |Gaussian| draws
/// for the amplitudes, theta uniform on [0, pi]. Same seed, same parameters.
CanonicalParams random_canonical(std::uint64_t seed);

/// Rank-1 projector |psi><psi|. Refuses states whose norm is off unity.
Matrix to_density(const Vector &psi);

/// Parses a state-description document: {"named": label},
/// {"canonical": {a0..a4, theta}} or {"amplitudes": [[re,im] x 8]}.
/// Validation errors name the failing field.
Vector state_from_json(const nlohmann::json &doc);

/// Emits the amplitude form, re-ingestable by state_from_json.
nlohmann::json state_to_json(const Vector &psi);

nlohmann::json canonical_to_json(const CanonicalParams &p);

} // namespace tritangle
