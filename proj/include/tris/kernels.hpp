// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_KERNELS_HPP
#define TRIS_KERNELS_HPP

#include <complex>
#include <cstddef>

// Data-parallel complex arithmetic kernels. A scalar reference
// implementation is always available; an AVX2+FMA variant is selected at
// runtime when the CPU supports it. The two are equivalence-tested.
namespace tris::kernels {

using cplx = std::complex<double>;

// sum_i conj(a[i]) * b[i]
cplx dotc(const cplx* a, const cplx* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);

// x[i] *= s
void scale(double s, cplx* x, std::size_t n);

// sum_i |x[i]|^2
double norm2sq(const cplx* x, std::size_t n);

// In-place LL^H factorization of a column-major n x n Hermitian matrix
// (lower triangle is read and overwritten). Returns -1 on success or the
// index of the first non-positive pivot. Exposed as a kernel so the whole
// factorization loop compiles inside the SIMD translation unit.
int chol_factor(cplx* a, std::size_t n);

// Solves L L^H x = b in place for nrhs right-hand sides stored
// contiguously at stride n, given a factor from chol_factor.
void chol_solve(const cplx* l, std::size_t n, cplx* b, std::size_t nrhs);

namespace scalar {
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale(double s, cplx* x, std::size_t n);
double norm2sq(const cplx* x, std::size_t n);
int chol_factor(cplx* a, std::size_t n);
void chol_solve(const cplx* l, std::size_t n, cplx* b, std::size_t nrhs);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define TRIS_HAVE_AVX2_KERNELS 1
namespace avx2 {
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale(double s, cplx* x, std::size_t n);
double norm2sq(const cplx* x, std::size_t n);
int chol_factor(cplx* a, std::size_t n);
void chol_solve(const cplx* l, std::size_t n, cplx* b, std::size_t nrhs);
}  // namespace avx2
#endif

// Name of the backend currently dispatched ("scalar" or "avx2").
const char* active_backend();

// Force a backend by name; throws std::invalid_argument on unknown name or
// if the requested backend is unavailable on this CPU. Intended for tests
// and the TRIS_KERNELS environment variable.
void force_backend(const char* name);

}  // namespace tris::kernels

#endif
