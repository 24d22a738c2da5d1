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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tritangle/entanglement.hpp"
#include "tritangle/errors.hpp"
#include "tritangle/mapping.hpp"
#include "tritangle/measurement.hpp"
#include "tritangle/states.hpp"

using namespace tritangle;
using tritangle::testing::random_state;

TEST_CASE("apply_noise: endpoints and the closed-form fidelity") {
    const Vector ghz = named_state(NamedState::GHZ);

    const Matrix pure = apply_noise(ghz, NoiseModel{0.0, 0.0});
    CHECK((pure - to_density(ghz)).cwiseAbs().maxCoeff() <= 1e-15);

    const Matrix white = apply_noise(ghz, NoiseModel{1.0, 0.0});
    CHECK((white - Matrix::Identity(8, 8) / 8.0).cwiseAbs().maxCoeff() <= 1e-15);

    const Matrix noisy = apply_noise(ghz, NoiseModel{0.08, 0.0});
    CHECK(fidelity(to_density(ghz), noisy) == doctest::Approx(0.93).epsilon(1e-9));
    CHECK(std::abs(noisy.trace().real() - 1.0) <= 1e-12);

    CHECK_THROWS_AS(apply_noise(ghz, NoiseModel{1.5, 0.0}), ValidationError);
    CHECK_THROWS_AS(apply_noise(ghz, NoiseModel{0.0, -0.1}), ValidationError);
}

TEST_CASE("apply_noise: expectations shrink linearly in 1-p") {
    Rng rng(131);
    const Vector psi = random_state(rng);
    for (double p : {0.0, 0.05, 0.3, 0.9}) {
        const Matrix rho = apply_noise(psi, NoiseModel{p, 0.0});
        for (int i = 1; i <= 63; i += 7) {
            const PauliString b = PauliString::from_index(i);
            CHECK(std::abs(expectation(rho, b) - (1.0 - p) * expectation(psi, b)) <= 1e-10);
        }
    }
}

TEST_CASE("sample_expectation: degenerate, deterministic and concentrated") {
    const Matrix sep = to_density(named_state(NamedState::Sep));
    const ShotEstimate exact_one = sample_expectation(sep, 3, 57, 999);
    CHECK(exact_one.mean == 1.0);
    CHECK(exact_one.std_error == 0.0);

    const Matrix ghz = to_density(named_state(NamedState::GHZ));
    const ShotEstimate big = sample_expectation(ghz, 21, 1000000, 4);
    CHECK(std::abs(big.mean - 1.0) <= 0.005);

    const ShotEstimate a = sample_expectation(ghz, 21, 10000, 1234, NoiseModel{0.0, 0.01});
    const ShotEstimate b = sample_expectation(ghz, 21, 10000, 1234, NoiseModel{0.0, 0.01});
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);

    CHECK_THROWS_AS(sample_expectation(ghz, 21, 0, 1), ValidationError);
    CHECK_THROWS_AS(sample_expectation(ghz, 0, 10, 1), ValidationError);
}

TEST_CASE("sample_expectation: std_error contract and 5-sigma coverage") {
    const Vector w = named_state(NamedState::W);
    const Matrix rho = to_density(w);
    const double truth = expectation(w, PauliString::from_index(23));
    const long shots = 4000;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ShotEstimate est = sample_expectation(rho, 23, shots, seed);
        CHECK(est.std_error <= 1.0 / std::sqrt(static_cast<double>(shots)) + 1e-9);
        CHECK(std::abs(est.mean - truth) <= 5.0 * (est.std_error + 1e-6));
    }

    const ShotEstimate with_readout =
        sample_expectation(rho, 23, shots, 7, NoiseModel{0.0, 0.02});
    CHECK(with_readout.std_error <=
          1.0 / std::sqrt(static_cast<double>(shots)) + 0.02 + 1e-9);
    CHECK(with_readout.std_error >= 0.02);
}

TEST_CASE("tomography: exact expectations reproduce the state") {
    const Matrix ghz = to_density(named_state(NamedState::GHZ));
    const Matrix rebuilt = tomography(exact_provider(ghz), 1, 0);
    CHECK((rebuilt - ghz).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(fidelity(rebuilt, ghz) == doctest::Approx(1.0).epsilon(1e-9));

    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix rho = to_density(random_state(rng));
        CHECK((tomography(exact_provider(rho), 1, 0) - rho).cwiseAbs().maxCoeff() <= 1e-10);
    }

    // Mixed inputs reconstruct exactly too.
    const Matrix noisy = apply_noise(named_state(NamedState::W), NoiseModel{0.2, 0.0});
    CHECK((tomography(exact_provider(noisy), 1, 0) - noisy).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("tomography: sampled reconstruction is a valid state with high fidelity") {
    const Matrix w = to_density(named_state(NamedState::W));
    const Matrix rebuilt = tomography(sampled_provider(w), 10000, 2024);

    CHECK(is_hermitian(rebuilt, 1e-12));
    CHECK(std::abs(rebuilt.trace().real() - 1.0) <= 1e-12);
    const EigSystem eig = herm_eig(rebuilt);
    CHECK(eig.values.minCoeff() >= -1e-12);

    double mean = 0.0;
    for (std::uint64_t r = 0; r < 5; ++r) {
        mean += fidelity(tomography(sampled_provider(w), 10000, derive_seed(1, r)), w);
    }
    CHECK(mean / 5 >= 0.99);
}

TEST_CASE("repeated_runs: statistics across derived seeds") {
    const RunStats constant = repeated_runs([](std::uint64_t) { return std::vector<double>{2.5}; },
                                            5, 11);
    CHECK(constant.mean[0] == doctest::Approx(2.5));
    CHECK(constant.stddev[0] == 0.0);

    const Matrix ghz = to_density(named_state(NamedState::GHZ));
    const RunStats ghz_stats = repeated_runs(
        [&](std::uint64_t seed) {
            return std::vector<double>{sample_expectation(ghz, 21, 10000, seed).mean};
        },
        10, 3);
    CHECK(std::abs(ghz_stats.mean[0] - 1.0) <= 0.02);
    CHECK(ghz_stats.stddev[0] <= 0.02);

    const Matrix depol = apply_noise(named_state(NamedState::GHZ), NoiseModel{0.1, 0.0});
    const RunStats noisy = repeated_runs(
        [&](std::uint64_t seed) {
            return std::vector<double>{sample_expectation(depol, 21, 10000, seed).mean};
        },
        10, 19);
    CHECK(std::abs(noisy.mean[0] - 0.9) <= 0.02);

    CHECK_THROWS_AS(repeated_runs([](std::uint64_t) { return std::vector<double>{0.0}; }, 1, 0),
                    ValidationError);
}

TEST_CASE("seed derivation: distinct streams from one master seed") {
    CHECK(derive_seed(1, 1) != derive_seed(1, 2));
    CHECK(derive_seed(1, 1) != derive_seed(2, 1));
    CHECK(derive_seed(5, 7) == derive_seed(5, 7));
}
