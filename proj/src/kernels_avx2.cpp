// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/kernels.hpp"

#ifdef TRIS_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>

// Complex doubles are stored interleaved [re0, im0, re1, im1, ...]; each
// 256-bit vector holds two complex values.
namespace tris::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    // sign pattern applied to the swapped factor: conj(a)*b has
    // imag = ar*bi - ai*br.
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        const __m256d vb_swap = _mm256_permute_pd(vb, 0x5);
        acc_im = _mm256_fmadd_pd(va, _mm256_mul_pd(vb_swap, sign), acc_im);
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const __m256d vp = _mm256_set1_pd(alpha.real());
    const __m256d vq = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * i);
        const __m256d vx_swap = _mm256_permute_pd(vx, 0x5);
        // even lanes: p*xr - q*xi, odd lanes: p*xi + q*xr
        const __m256d prod =
            _mm256_addsub_pd(_mm256_mul_pd(vp, vx), _mm256_mul_pd(vq, vx_swap));
        _mm256_storeu_pd(py + 2 * i,
                         _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
    }
    const double p = alpha.real(), q = alpha.imag();
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cplx(p * xr - q * xi, p * xi + q * xr);
    }
}

void scale(double s, cplx* x, std::size_t n) {
    double* px = reinterpret_cast<double*>(x);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        _mm256_storeu_pd(px + 2 * i,
                         _mm256_mul_pd(_mm256_loadu_pd(px + 2 * i), vs));
    }
    for (; i < n; ++i) x[i] *= s;
}

double norm2sq(const cplx* x, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(px + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return s;
}

namespace {

// y += a1 x1 + a2 x2, one pass over y
inline void axpy2(cplx a1, const cplx* x1, cplx a2, const cplx* x2, cplx* y,
                  std::size_t n) {
    const double* px1 = reinterpret_cast<const double*>(x1);
    const double* px2 = reinterpret_cast<const double*>(x2);
    double* py = reinterpret_cast<double*>(y);
    const __m256d vp1 = _mm256_set1_pd(a1.real());
    const __m256d vq1 = _mm256_set1_pd(a1.imag());
    const __m256d vp2 = _mm256_set1_pd(a2.real());
    const __m256d vq2 = _mm256_set1_pd(a2.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v1 = _mm256_loadu_pd(px1 + 2 * i);
        const __m256d v2 = _mm256_loadu_pd(px2 + 2 * i);
        const __m256d prod1 = _mm256_addsub_pd(
            _mm256_mul_pd(vp1, v1),
            _mm256_mul_pd(vq1, _mm256_permute_pd(v1, 0x5)));
        const __m256d prod2 = _mm256_addsub_pd(
            _mm256_mul_pd(vp2, v2),
            _mm256_mul_pd(vq2, _mm256_permute_pd(v2, 0x5)));
        _mm256_storeu_pd(py + 2 * i,
                         _mm256_add_pd(_mm256_loadu_pd(py + 2 * i),
                                       _mm256_add_pd(prod1, prod2)));
    }
    for (; i < n; ++i) {
        const double xr1 = x1[i].real(), xi1 = x1[i].imag();
        const double xr2 = x2[i].real(), xi2 = x2[i].imag();
        y[i] += cplx(a1.real() * xr1 - a1.imag() * xi1 + a2.real() * xr2 -
                         a2.imag() * xi2,
                     a1.real() * xi1 + a1.imag() * xr1 + a2.real() * xi2 +
                         a2.imag() * xr2);
    }
}

}  // namespace

// Same loop nests as the scalar variant; the axpy / dotc bodies above are
// inlined here, which is the whole point of owning the outer loops.
int chol_factor(cplx* a, std::size_t n) {
    constexpr std::size_t kPanel = 16;
    for (std::size_t jb = 0; jb < n; jb += kPanel) {
        const std::size_t je = jb + kPanel < n ? jb + kPanel : n;
        for (std::size_t j = jb; j < je; ++j) {
            cplx* colj = a + j * n;
            for (std::size_t k = jb; k < j; ++k) {
                const cplx* colk = a + k * n;
                axpy(-std::conj(colk[j]), colk + j, colj + j, n - j);
            }
            const double piv = colj[j].real();
            if (!(piv > 0.0) || !std::isfinite(piv)) return static_cast<int>(j);
            const double d = std::sqrt(piv);
            colj[j] = d;
            const double inv = 1.0 / d;
            for (std::size_t i = j + 1; i < n; ++i) colj[i] *= inv;
        }
        for (std::size_t k = je; k < n; ++k) {
            cplx* tail = a + k * n + k;
            std::size_t j = jb;
            for (; j + 2 <= je; j += 2) {
                const cplx* c0 = a + j * n;
                const cplx* c1 = a + (j + 1) * n;
                axpy2(-std::conj(c0[k]), c0 + k, -std::conj(c1[k]), c1 + k,
                      tail, n - k);
            }
            for (; j < je; ++j) {
                const cplx* colj = a + j * n;
                axpy(-std::conj(colj[k]), colj + k, tail, n - k);
            }
        }
    }
    return -1;
}

void chol_solve(const cplx* l, std::size_t n, cplx* b, std::size_t nrhs) {
    for (std::size_t j = 0; j < n; ++j) {
        const cplx* colj = l + j * n;
        const double inv = 1.0 / colj[j].real();
        for (std::size_t r = 0; r < nrhs; ++r) {
            cplx* br = b + r * n;
            br[j] *= inv;
            axpy(-br[j], colj + j + 1, br + j + 1, n - j - 1);
        }
    }
    for (std::size_t j = n; j-- > 0;) {
        const cplx* colj = l + j * n;
        const double inv = 1.0 / colj[j].real();
        for (std::size_t r = 0; r < nrhs; ++r) {
            cplx* br = b + r * n;
            br[j] -= dotc(colj + j + 1, br + j + 1, n - j - 1);
            br[j] *= inv;
        }
    }
}

}  // namespace tris::kernels::avx2

#endif  // TRIS_HAVE_AVX2_KERNELS
