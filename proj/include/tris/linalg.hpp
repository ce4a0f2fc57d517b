// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_LINALG_HPP
#define TRIS_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "tris/kernels.hpp"

namespace tris {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

inline cplx dotc(const CVec& a, const CVec& b) {
    return kernels::dotc(a.data(), b.data(), a.size());
}

inline double norm2sq(const CVec& x) {
    return kernels::norm2sq(x.data(), x.size());
}

inline void axpy(cplx alpha, const CVec& x, CVec& y) {
    kernels::axpy(alpha, x.data(), y.data(), x.size());
}

inline void scale(double s, CVec& x) { kernels::scale(s, x.data(), x.size()); }

// Dense Hermitian matrix, column-major, full storage.
class HermMat {
  public:
    HermMat() = default;
    explicit HermMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static HermMat identity(int n);

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[idx(i, j)]; }
    const cplx& operator()(int i, int j) const { return a_[idx(i, j)]; }

    const cplx* data() const { return a_.data(); }
    cplx* data() { return a_.data(); }

    // A += c * h h^H (real c). Column j gets (c * conj(h[j])) * h.
    void rank1_update(double c, const CVec& h);

    void add_diag(double s);

    // max_{i,j} |A(i,j) - conj(A(j,i))|
    double hermitian_residual() const;

    CVec mul(const CVec& x) const;

    // x^H A x; the imaginary residue of the quadratic form is discarded.
    double quad_form(const CVec& x) const;

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(j) * n_ + i;
    }

    int n_ = 0;
    std::vector<cplx> a_;
};

// In-place LL^H factorization of a Hermitian positive-definite matrix.
class CholeskyFactor {
  public:
    // Throws std::runtime_error naming the failing pivot if A is not PD.
    explicit CholeskyFactor(const HermMat& a);

    int dim() const { return n_; }

    CVec solve(const CVec& b) const;
    void solve_inplace(cplx* b) const;

    // Solves nrhs systems at once; right-hand sides contiguous at stride n.
    void solve_blocks(cplx* b, int nrhs) const;

  private:
    int n_;
    std::vector<cplx> l_;  // lower triangle, column-major full storage
};

// x = A^{-1} b via Cholesky; A must be Hermitian PD.
CVec herm_solve(const HermMat& a, const CVec& b);

}  // namespace tris

#endif
