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

#include "tritangle/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "tritangle/errors.hpp"

namespace tritangle {

void require_qubit(int qubit) {
    if (qubit < 1 || qubit > kQubits) {
        throw ValidationError("qubit label must be 1, 2 or 3; got " + std::to_string(qubit));
    }
}

bool is_hermitian(const Matrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix tensor(const Matrix &a, const Matrix &b) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (rows > kDim || cols > kDim) {
        std::ostringstream msg;
        msg << "tensor result " << rows << "x" << cols << " exceeds the fixed 8x8 limit";
        throw ValidationError(msg.str());
    }
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix tensor(const Matrix &a, const Matrix &b, const Matrix &c) {
    return tensor(tensor(a, b), c);
}

Matrix partial_trace(const Matrix &rho, const std::set<int> &keep) {
    if (rho.rows() != kDim || rho.cols() != kDim) {
        throw ValidationError("partial_trace expects an 8x8 density matrix");
    }
    if (keep.empty() || static_cast<int>(keep.size()) >= kQubits) {
        throw ValidationError("keep set must be a nonempty strict subset of {1,2,3}");
    }
    std::vector<int> kept;
    std::vector<int> traced;
    for (int q = 1; q <= kQubits; ++q) {
        if (keep.count(q)) {
            kept.push_back(q);
        } else {
            traced.push_back(q);
        }
    }
    if (static_cast<int>(kept.size()) != static_cast<int>(keep.size())) {
        throw ValidationError("keep set contains labels outside {1,2,3}");
    }

    const int kn = static_cast<int>(kept.size());
    const int tn = static_cast<int>(traced.size());
    const int dim = 1 << kn;
    Matrix out = Matrix::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            Cplx sum = 0.0;
            for (int t = 0; t < (1 << tn); ++t) {
                int row = 0;
                int col = 0;
                for (int k = 0; k < kn; ++k) {
                    const int bit_r = (r >> (kn - 1 - k)) & 1;
                    const int bit_c = (c >> (kn - 1 - k)) & 1;
                    row |= bit_r * mask_of(kept[k]);
                    col |= bit_c * mask_of(kept[k]);
                }
                for (int k = 0; k < tn; ++k) {
                    const int bit_t = (t >> (tn - 1 - k)) & 1;
                    row |= bit_t * mask_of(traced[k]);
                    col |= bit_t * mask_of(traced[k]);
                }
                sum += rho(row, col);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

Matrix partial_transpose(const Matrix &rho, int part) {
    if (rho.rows() != kDim || rho.cols() != kDim) {
        throw ValidationError("partial_transpose expects an 8x8 matrix");
    }
    require_qubit(part);
    const int m = mask_of(part);
    Matrix out(kDim, kDim);
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const int ip = (i & ~m) | (j & m);
            const int jp = (j & ~m) | (i & m);
            out(i, j) = rho(ip, jp);
        }
    }
    return out;
}

EigSystem herm_eig(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("herm_eig expects a square matrix");
    }
    if (!is_hermitian(m, 1e-10)) {
        throw NumericalError("herm_eig: input is not Hermitian within 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("herm_eig: eigendecomposition failed to converge");
    }
    const Eigen::Index n = m.rows();
    EigSystem out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    // Eigen returns ascending order; flip to descending.
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = solver.eigenvalues()(n - 1 - k);
        out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    }
    return out;
}

Matrix sqrtm_psd(const Matrix &m) {
    const EigSystem eig = herm_eig(m);
    Eigen::VectorXd clipped = eig.values;
    for (Eigen::Index k = 0; k < clipped.size(); ++k) {
        if (clipped(k) < -1e-10) {
            std::ostringstream msg;
            msg << "sqrtm_psd: eigenvalue " << clipped(k) << " is below the PSD tolerance -1e-10";
            throw NumericalError(msg.str());
        }
        // Eigenvalues at rounding-noise scale become exact zeros; taking
        // their square roots would otherwise inflate 1e-16 noise to 1e-8.
        clipped(k) = clipped(k) < 1e-13 ? 0.0 : std::sqrt(clipped(k));
    }
    return eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
}

double trace_norm(const Matrix &m) {
    const EigSystem eig = herm_eig(m);
    return eig.values.cwiseAbs().sum();
}

} // namespace tritangle
