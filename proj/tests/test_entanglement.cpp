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
#include "tritangle/states.hpp"

using namespace tritangle;
using tritangle::testing::random_state;

namespace {

// Schmidt-route negativity oracle for pure states: with l_i the eigenvalues
// of the single-qubit reduction, ((sum_i sqrt(l_i))^2 - 1) / 2.
double negativity_schmidt(const Vector &psi, int part) {
    const EigSystem eig = herm_eig(partial_trace(to_density(psi), {part}));
    double s = 0.0;
    for (int k = 0; k < eig.values.size(); ++k) {
        s += std::sqrt(std::max(eig.values(k), 0.0));
    }
    return (s * s - 1.0) / 2.0;
}

Matrix bell_pair() {
    Vector phi = Vector::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    return phi * phi.adjoint();
}

} // namespace

TEST_CASE("concurrence_2q: Bell pair, product state, W reduction") {
    CHECK(concurrence_2q(bell_pair()) == doctest::Approx(1.0));

    Matrix product = Matrix::Zero(4, 4);
    product(0, 0) = 1.0;
    CHECK(concurrence_2q(product) == doctest::Approx(0.0));

    const Matrix rho_ab = partial_trace(to_density(named_state(NamedState::W)), {1, 2});
    CHECK(concurrence_2q(rho_ab) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("concurrence_2q: refuses non-PSD input") {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -0.5;
    CHECK_THROWS_WITH_AS(concurrence_2q(m), doctest::Contains("non-PSD"), ValidationError);
}

TEST_CASE("concurrence_2q: canonical closed forms 2 a0 a3 and 2 a0 a2") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const CanonicalParams p = random_canonical(seed);
        const Matrix rho = to_density(from_canonical(p));
        CHECK(std::abs(concurrence_2q(partial_trace(rho, {1, 2})) - 2.0 * p.a0 * p.a3) <= 1e-7);
        CHECK(std::abs(concurrence_2q(partial_trace(rho, {1, 3})) - 2.0 * p.a0 * p.a2) <= 1e-7);
    }
}

TEST_CASE("concurrence_pure_bipartite: GHZ, product, W") {
    for (int part = 1; part <= 3; ++part) {
        CHECK(concurrence_pure_bipartite(named_state(NamedState::GHZ), part) ==
              doctest::Approx(1.0));
    }
    CHECK(concurrence_pure_bipartite(named_state(NamedState::Sep), 1) == doctest::Approx(0.0));
    CHECK(concurrence_pure_bipartite(named_state(NamedState::W), 1) ==
          doctest::Approx(2.0 * std::sqrt(2.0) / 3.0));
}

TEST_CASE("three_tangle: named states and the canonical 0.6/0.8 point") {
    CHECK(three_tangle(named_state(NamedState::GHZ)).tau == doctest::Approx(1.0));

    const TangleReport w = three_tangle(named_state(NamedState::W));
    CHECK(w.c2_a_bc == doctest::Approx(8.0 / 9.0));
    CHECK(w.c2_ab == doctest::Approx(4.0 / 9.0));
    CHECK(w.c2_ac == doctest::Approx(4.0 / 9.0));
    CHECK(std::abs(w.tau) <= 1e-8);

    const Vector v = from_canonical({0.6, 0, 0, 0, 0.8, 0.0});
    CHECK(three_tangle(v).tau == doctest::Approx(0.9216).epsilon(1e-8));
}

TEST_CASE("three_tangle: matches 4 a0^2 a4^2 on random canonical states") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const CanonicalParams p = random_canonical(seed);
        const TangleReport report = three_tangle(from_canonical(p));
        CHECK(std::abs(report.tau - 4.0 * p.a0 * p.a0 * p.a4 * p.a4) <= 1e-8);
        // Definition consistency of the report fields.
        const double recombined = report.c2_a_bc - report.c2_ab - report.c2_ac;
        CHECK(report.tau - std::max(recombined, 0.0) <= 1e-10);
        CHECK(report.tau >= 0.0);
        CHECK(report.tau <= 1.0 + 1e-10);
    }
}

TEST_CASE("three_tangle: definition consistency on arbitrary states") {
    Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const Vector psi = random_state(rng);
        const TangleReport r = three_tangle(psi);
        const double c1 = concurrence_pure_bipartite(psi, 1);
        CHECK(std::abs(c1 * c1 - r.c2_a_bc) <= 1e-10);
        CHECK(r.tau >= 0.0);
        CHECK(r.tau <= 1.0 + 1e-9);
    }
}

TEST_CASE("negativity_min: published theory values") {
    CHECK(negativity_min(named_state(NamedState::GHZ)) == doctest::Approx(0.5));
    CHECK(negativity_min(named_state(NamedState::W)) ==
          doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-9));
    CHECK(negativity_min(named_state(NamedState::WWbar)) ==
          doctest::Approx(std::sqrt(5.0) / 6.0).epsilon(1e-9));
    CHECK(negativity_min(named_state(NamedState::BS1)) == doctest::Approx(0.0));
    CHECK(negativity_min(named_state(NamedState::BS2)) == doctest::Approx(0.0));
    CHECK(negativity_min(named_state(NamedState::BS3)) == doctest::Approx(0.0));
    CHECK(negativity_min(named_state(NamedState::Sep)) == doctest::Approx(0.0));
}

TEST_CASE("negativity: partial-transpose route matches the Schmidt route") {
    Rng rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const Vector psi = random_state(rng);
        const Matrix rho = to_density(psi);
        double schmidt_min = 1.0;
        for (int k = 1; k <= 3; ++k) {
            const double via_pt = (trace_norm(partial_transpose(rho, k)) - 1.0) / 2.0;
            const double via_schmidt = negativity_schmidt(psi, k);
            CHECK(std::abs(via_pt - via_schmidt) <= 1e-9);
            schmidt_min = std::min(schmidt_min, via_schmidt);
        }
        CHECK(std::abs(negativity_min(psi) - std::max(schmidt_min, 0.0)) <= 1e-9);
    }
}

TEST_CASE("negativity and tangle ranges over 10^4 random canonical states") {
    double neg_lo = 1.0;
    double neg_hi = -1.0;
    double tau_lo = 1.0;
    double tau_hi = -1.0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const Vector psi = from_canonical(random_canonical(seed));
        const double neg = negativity_min(psi);
        const double tau = three_tangle(psi).tau;
        neg_lo = std::min(neg_lo, neg);
        neg_hi = std::max(neg_hi, neg);
        tau_lo = std::min(tau_lo, tau);
        tau_hi = std::max(tau_hi, tau);
    }
    CHECK(neg_lo >= 0.0);
    CHECK(neg_hi <= 0.5 + 1e-9);
    CHECK(tau_lo >= 0.0);
    CHECK(tau_hi <= 1.0 + 1e-9);
}

TEST_CASE("fidelity: identity, orthogonality, depolarized GHZ") {
    const Matrix rho = to_density(named_state(NamedState::W));
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-9));

    const Matrix zero = to_density(named_state(NamedState::Sep));
    Vector ones = Vector::Zero(8);
    ones(7) = 1.0;
    CHECK(fidelity(zero, to_density(ones)) == doctest::Approx(0.0));

    const Matrix ghz = to_density(named_state(NamedState::GHZ));
    const double p = 0.1;
    const Matrix mixed = (1.0 - p) * ghz + p / 8.0 * Matrix::Identity(8, 8);
    CHECK(fidelity(ghz, mixed) == doctest::Approx(0.9125).epsilon(1e-9));
}

TEST_CASE("fidelity: symmetric and refuses non-PSD input") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = tritangle::testing::random_density(rng);
        const Matrix b = tritangle::testing::random_density(rng);
        const double f_ab = fidelity(a, b);
        CHECK(std::abs(f_ab - fidelity(b, a)) <= 1e-9);
        CHECK(f_ab >= 0.0);
        CHECK(f_ab <= 1.0 + 1e-9);
    }

    Matrix bad = Matrix::Identity(8, 8);
    bad(0, 0) = -0.5;
    const Matrix good = to_density(named_state(NamedState::GHZ));
    CHECK_THROWS_AS(fidelity(bad, good), ValidationError);
    CHECK_THROWS_AS(fidelity(good, bad), ValidationError);
}
