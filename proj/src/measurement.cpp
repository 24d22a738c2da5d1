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

#include "tritangle/measurement.hpp"

#include <cmath>

#include "tritangle/errors.hpp"
#include "tritangle/mapping.hpp"
#include "tritangle/rng.hpp"
#include "tritangle/states.hpp"

namespace tritangle {

void NoiseModel::validate() const {
    if (!(depolarizing_p >= 0.0 && depolarizing_p <= 1.0)) {
        throw ValidationError("noise.depolarizing_p must lie in [0, 1]");
    }
    if (!(readout_sigma >= 0.0)) {
        throw ValidationError("noise.readout_sigma must be nonnegative");
    }
}

Matrix apply_noise(const Vector &psi, const NoiseModel &nm) {
    nm.validate();
    const Matrix pure = to_density(psi);
    return (1.0 - nm.depolarizing_p) * pure +
           nm.depolarizing_p / kDim * Matrix::Identity(kDim, kDim);
}

ShotEstimate sample_expectation(const Matrix &rho, int index, long shots, std::uint64_t seed,
                                const NoiseModel &nm) {
    if (shots < 1) {
        throw ValidationError("shots must be >= 1");
    }
    if (index < 1 || index > 63) {
        throw ValidationError("Pauli index must be in 1..63; got " + std::to_string(index));
    }
    nm.validate();

    const MappingRecipe &r = recipe_table()[index - 1];
    const Matrix mapped = apply_dm(r.circuit, rho);
    double p0 = 0.0;
    for (int j = 0; j < kDim; ++j) {
        if (bit_of(j, r.measured) == 0) {
            p0 += mapped(j, j).real();
        }
    }
    p0 = std::min(std::max(p0, 0.0), 1.0);

    Rng rng(seed);
    long up = 0;
    for (long s = 0; s < shots; ++s) {
        if (rng.uniform() < p0) {
            ++up;
        }
    }
    const double raw_mean = (2.0 * up - shots) / static_cast<double>(shots);

    ShotEstimate est;
    est.shots = shots;
    est.mean = r.sign * raw_mean;
    if (nm.readout_sigma > 0.0) {
        est.mean += nm.readout_sigma * rng.gaussian();
    }
    const double binom_var = std::max(0.0, 1.0 - raw_mean * raw_mean) / shots;
    est.std_error = std::sqrt(binom_var + nm.readout_sigma * nm.readout_sigma);
    return est;
}

ExpectationProvider exact_provider(Matrix rho) {
    return [rho = std::move(rho)](int index, long, std::uint64_t) {
        return expectation(rho, PauliString::from_index(index));
    };
}

ExpectationProvider sampled_provider(Matrix rho, NoiseModel nm) {
    return [rho = std::move(rho), nm](int index, long shots, std::uint64_t seed) {
        return sample_expectation(rho, index, shots, seed, nm).mean;
    };
}

Matrix tomography(const ExpectationProvider &provider, long shots_per_setting, std::uint64_t seed) {
    Matrix m = Matrix::Identity(kDim, kDim);
    for (int i = 1; i <= 63; ++i) {
        const double e = provider(i, shots_per_setting, derive_seed(seed, i));
        m += e * pauli_matrix(PauliString::from_index(i));
    }
    m /= kDim;
    m = 0.5 * (m + m.adjoint().eval());

    // Nearest-PSD projection at unit trace: clip negative eigenvalues to
    // zero and spread the accumulated deficit evenly over the survivors,
    // re-clipping as needed (working up from the smallest eigenvalue).
    EigSystem eig = herm_eig(m); // descending
    Eigen::VectorXd values = eig.values;
    double deficit = 0.0;
    int live = static_cast<int>(values.size());
    while (live > 0 && values(live - 1) + deficit / live < 0.0) {
        deficit += values(live - 1);
        values(live - 1) = 0.0;
        --live;
    }
    if (live == 0) {
        throw NumericalError("tomography: estimate has no positive spectral mass");
    }
    for (int k = 0; k < live; ++k) {
        values(k) += deficit / live;
    }
    return eig.vectors * values.asDiagonal() * eig.vectors.adjoint();
}

RunStats repeated_runs(const std::function<std::vector<double>(std::uint64_t)> &task,
                       int repetitions, std::uint64_t seed) {
    if (repetitions < 2) {
        throw ValidationError("repeated_runs needs at least 2 repetitions");
    }
    std::vector<std::vector<double>> results;
    results.reserve(repetitions);
    for (int r = 0; r < repetitions; ++r) {
        results.push_back(task(derive_seed(seed, static_cast<std::uint64_t>(r))));
        if (results.back().size() != results.front().size()) {
            throw ValidationError("repeated_runs task returned a varying number of quantities");
        }
    }
    const std::size_t n = results.front().size();
    RunStats stats;
    stats.mean.assign(n, 0.0);
    stats.stddev.assign(n, 0.0);
    for (const auto &run : results) {
        for (std::size_t q = 0; q < n; ++q) {
            stats.mean[q] += run[q];
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        stats.mean[q] /= repetitions;
    }
    for (const auto &run : results) {
        for (std::size_t q = 0; q < n; ++q) {
            const double d = run[q] - stats.mean[q];
            stats.stddev[q] += d * d;
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        stats.stddev[q] = std::sqrt(stats.stddev[q] / (repetitions - 1));
    }
    return stats;
}

} // namespace tritangle
