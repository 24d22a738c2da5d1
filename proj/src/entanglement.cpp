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

#include "tritangle/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tritangle/errors.hpp"
#include "tritangle/states.hpp"

namespace tritangle {

namespace {

void require_density_matrix(const Matrix &rho, const char *who) {
    if (rho.rows() != rho.cols()) {
        throw ValidationError(std::string(who) + ": density matrix must be square");
    }
    if (!is_hermitian(rho, 1e-10)) {
        throw ValidationError(std::string(who) + ": density matrix must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        std::ostringstream msg;
        msg << who << ": non-PSD input refused (eigenvalue " << solver.eigenvalues().minCoeff() << ")";
        throw ValidationError(msg.str());
    }
}

const Matrix &spin_flip_yy() {
    static const Matrix yy = [] {
        Matrix sy(2, 2);
        sy << 0, Cplx(0, -1), Cplx(0, 1), 0;
        return tensor(sy, sy);
    }();
    return yy;
}

} // namespace

double concurrence_2q(const Matrix &rho4) {
    if (rho4.rows() != 4 || rho4.cols() != 4) {
        throw ValidationError("concurrence_2q expects a 4x4 density matrix");
    }

    // The Wootters spectrum: with S = sqrt(rho) and F the spin flip,
    // sqrt(rho) F rho* F sqrt(rho) = A A^dag for A = S F S*, so the l_i are
    // the singular values of A. Computing them directly (instead of taking
    // square roots of near-zero eigenvalues) keeps rank-deficient states
    // accurate to machine precision; eigenvalues of rho below 1e-13 are
    // treated as exact zeros for the same reason.
    EigSystem eig = herm_eig(rho4);
    if (eig.values.minCoeff() < -1e-10) {
        std::ostringstream msg;
        msg << "concurrence_2q: non-PSD input refused (eigenvalue " << eig.values.minCoeff() << ")";
        throw ValidationError(msg.str());
    }
    Eigen::VectorXd clipped = eig.values;
    for (Eigen::Index k = 0; k < clipped.size(); ++k) {
        clipped(k) = clipped(k) < 1e-13 ? 0.0 : std::sqrt(clipped(k));
    }
    const Matrix root = eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();

    const Matrix flipped = root * spin_flip_yy() * root.conjugate();
    Eigen::JacobiSVD<Matrix> svd(flipped);
    const Eigen::VectorXd lambda = svd.singularValues(); // descending
    return std::max(0.0, lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

double concurrence_pure_bipartite(const Vector &psi, int part) {
    require_qubit(part);
    const Matrix reduced = partial_trace(to_density(psi), {part});
    const double det = (reduced(0, 0) * reduced(1, 1) - reduced(0, 1) * reduced(1, 0)).real();
    return 2.0 * std::sqrt(std::max(det, 0.0));
}

TangleReport three_tangle(const Vector &psi) {
    const Matrix rho = to_density(psi);

    TangleReport report;
    const double c_a_bc = concurrence_pure_bipartite(psi, 1);
    report.c2_a_bc = c_a_bc * c_a_bc;

    const double c_ab = concurrence_2q(partial_trace(rho, {1, 2}));
    const double c_ac = concurrence_2q(partial_trace(rho, {1, 3}));
    report.c2_ab = c_ab * c_ab;
    report.c2_ac = c_ac * c_ac;

    const double raw = report.c2_a_bc - report.c2_ab - report.c2_ac;
    if (raw < -1e-8) {
        std::ostringstream msg;
        msg << "three_tangle: residual " << raw << " is negative beyond tolerance";
        throw NumericalError(msg.str());
    }
    report.tau = std::max(raw, 0.0);
    return report;
}

double negativity_min(const Matrix &rho) {
    if (rho.rows() != kDim || rho.cols() != kDim) {
        throw ValidationError("negativity_min expects an 8x8 density matrix");
    }
    double best = 1.0;
    for (int k = 1; k <= kQubits; ++k) {
        const double n_k = (trace_norm(partial_transpose(rho, k)) - 1.0) / 2.0;
        best = std::min(best, n_k);
    }
    return std::max(best, 0.0);
}

double negativity_min(const Vector &psi) {
    return negativity_min(to_density(psi));
}

double fidelity(const Matrix &a, const Matrix &b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw ValidationError("fidelity expects two density matrices of equal dimension");
    }
    require_density_matrix(a, "fidelity");
    require_density_matrix(b, "fidelity");

    // Tr sqrt(sqrt(a) b sqrt(a)) is the nuclear norm of sqrt(b) sqrt(a);
    // summing singular values sidesteps a second, noise-amplifying matrix
    // square root.
    Eigen::JacobiSVD<Matrix> svd(sqrtm_psd(b) * sqrtm_psd(a));
    const double tr = svd.singularValues().sum();
    return tr * tr;
}

} // namespace tritangle
