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
 * Stochastic measurement emulation: depolarizing state-preparation noise,
 * shot sampling of the mapped single-qubit z-measurements, Pauli-basis
 * tomography with linear inversion, and repeated-run statistics.
 *
 * Everything is deterministic given its seed; independent tasks derive
 * their own RNG streams via derive_seed so results never depend on
 * evaluation order.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tritangle/linalg.hpp"

namespace tritangle {

struct NoiseModel {
    double depolarizing_p = 0.0; // white-noise mixing weight in [0, 1]
    double readout_sigma = 0.0;  // additive Gaussian noise on each estimate

    void validate() const;
};

struct ShotEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long shots = 0;
};

/// (1-p) |psi><psi| + p I/8.
Matrix apply_noise(const Vector &psi, const NoiseModel &nm);

/// Estimates <B_index> on rho by mapping through the recipe circuit and
/// drawing `shots` +-1 outcomes of the measured qubit's z-basis readout.
/// Only the readout_sigma field of `nm` acts here; depolarizing noise is
/// applied to the state beforehand via apply_noise.
ShotEstimate sample_expectation(const Matrix &rho, int index, long shots, std::uint64_t seed,
                                const NoiseModel &nm = {});

/// Supplies an estimate of <B_index>; exact providers ignore shots and seed.
using ExpectationProvider = std::function<double(int index, long shots, std::uint64_t seed)>;

ExpectationProvider exact_provider(Matrix rho);
ExpectationProvider sampled_provider(Matrix rho, NoiseModel nm = {});

/// Linear inversion rho = (1/8)(I + sum_i <B_i> B_i) over all 63 settings,
/// followed by the nearest-PSD unit-trace projection (hermitize, clip
/// negative eigenvalues to zero and spread the deficit over the remaining
/// spectrum). Exact expectations reproduce the input to 1e-10.
Matrix tomography(const ExpectationProvider &provider, long shots_per_setting, std::uint64_t seed);

struct RunStats {
    std::vector<double> mean;
    std::vector<double> stddev;
};

/// Runs `task` under `repetitions` independently derived seeds and returns
/// the per-quantity sample mean and standard deviation.
RunStats repeated_runs(const std::function<std::vector<double>(std::uint64_t)> &task,
                       int repetitions, std::uint64_t seed);

} // namespace tritangle
