// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tris {

HermMat HermMat::identity(int n) {
    HermMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void HermMat::rank1_update(double c, const CVec& h) {
    for (int j = 0; j < n_; ++j) {
        const cplx alpha = c * std::conj(h[j]);
        kernels::axpy(alpha, h.data(), a_.data() + idx(0, j), n_);
    }
}

void HermMat::add_diag(double s) {
    for (int i = 0; i < n_; ++i) a_[idx(i, i)] += s;
}

double HermMat::hermitian_residual() const {
    double r = 0.0;
    for (int j = 0; j < n_; ++j) {
        for (int i = 0; i < n_; ++i) {
            r = std::max(r, std::abs(a_[idx(i, j)] - std::conj(a_[idx(j, i)])));
        }
    }
    return r;
}

CVec HermMat::mul(const CVec& x) const {
    CVec y(n_, cplx(0.0));
    for (int j = 0; j < n_; ++j) {
        kernels::axpy(x[j], a_.data() + idx(0, j), y.data(), n_);
    }
    return y;
}

double HermMat::quad_form(const CVec& x) const {
    return dotc(x, mul(x)).real();
}

CholeskyFactor::CholeskyFactor(const HermMat& a) : n_(a.dim()), l_(a.data(), a.data() + static_cast<std::size_t>(n_) * n_) {
    const int pivot = kernels::chol_factor(l_.data(), static_cast<std::size_t>(n_));
    if (pivot >= 0) {
        throw std::runtime_error(
            "cholesky: matrix not positive definite at pivot " +
            std::to_string(pivot));
    }
}

void CholeskyFactor::solve_inplace(cplx* b) const {
    kernels::chol_solve(l_.data(), static_cast<std::size_t>(n_), b, 1);
}

void CholeskyFactor::solve_blocks(cplx* b, int nrhs) const {
    kernels::chol_solve(l_.data(), static_cast<std::size_t>(n_), b,
                        static_cast<std::size_t>(nrhs));
}

CVec CholeskyFactor::solve(const CVec& b) const {
    CVec x = b;
    solve_inplace(x.data());
    return x;
}

CVec herm_solve(const HermMat& a, const CVec& b) {
    return CholeskyFactor(a).solve(b);
}

}  // namespace tris
