// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace tris::kernels {

namespace scalar {

cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double p = alpha.real(), q = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cplx(p * xr - q * xi, p * xi + q * xr);
    }
}

void scale(double s, cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= s;
}

double norm2sq(const cplx* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

namespace {

// y += a1 x1 + a2 x2, one pass over y
inline void axpy2(cplx a1, const cplx* x1, cplx a2, const cplx* x2, cplx* y,
                  std::size_t n) {
    const double p1 = a1.real(), q1 = a1.imag();
    const double p2 = a2.real(), q2 = a2.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr1 = x1[i].real(), xi1 = x1[i].imag();
        const double xr2 = x2[i].real(), xi2 = x2[i].imag();
        y[i] += cplx(p1 * xr1 - q1 * xi1 + p2 * xr2 - q2 * xi2,
                     p1 * xi1 + q1 * xr1 + p2 * xi2 + q2 * xr2);
    }
}

}  // namespace

// Blocked right-looking LL^H: factor a panel of kPanel columns, then apply
// one rank-kPanel update to the trailing columns. The panel stays hot in L1
// across the trailing sweep, which is what makes the blocking pay off.
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
    // L y = b, all right-hand sides per column so the column stays hot
    for (std::size_t j = 0; j < n; ++j) {
        const cplx* colj = l + j * n;
        const double inv = 1.0 / colj[j].real();
        for (std::size_t r = 0; r < nrhs; ++r) {
            cplx* br = b + r * n;
            br[j] *= inv;
            axpy(-br[j], colj + j + 1, br + j + 1, n - j - 1);
        }
    }
    // L^H x = y
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

}  // namespace scalar

namespace {

struct Backend {
    cplx (*dotc)(const cplx*, const cplx*, std::size_t);
    void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
    void (*scale)(double, cplx*, std::size_t);
    double (*norm2sq)(const cplx*, std::size_t);
    int (*chol_factor)(cplx*, std::size_t);
    void (*chol_solve)(const cplx*, std::size_t, cplx*, std::size_t);
    const char* name;
};

constexpr Backend kScalar{scalar::dotc,        scalar::axpy,
                          scalar::scale,       scalar::norm2sq,
                          scalar::chol_factor, scalar::chol_solve,
                          "scalar"};

#ifdef TRIS_HAVE_AVX2_KERNELS
constexpr Backend kAvx2{avx2::dotc,        avx2::axpy,
                        avx2::scale,       avx2::norm2sq,
                        avx2::chol_factor, avx2::chol_solve,
                        "avx2"};

bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

Backend pick_default() {
    if (const char* env = std::getenv("TRIS_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return kScalar;
#ifdef TRIS_HAVE_AVX2_KERNELS
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return kAvx2;
#endif
    }
#ifdef TRIS_HAVE_AVX2_KERNELS
    if (cpu_has_avx2()) return kAvx2;
#endif
    return kScalar;
}

Backend g_backend = pick_default();

}  // namespace

cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
    return g_backend.dotc(a, b, n);
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    g_backend.axpy(alpha, x, y, n);
}

void scale(double s, cplx* x, std::size_t n) { g_backend.scale(s, x, n); }

double norm2sq(const cplx* x, std::size_t n) { return g_backend.norm2sq(x, n); }

int chol_factor(cplx* a, std::size_t n) { return g_backend.chol_factor(a, n); }

void chol_solve(const cplx* l, std::size_t n, cplx* b, std::size_t nrhs) {
    g_backend.chol_solve(l, n, b, nrhs);
}

const char* active_backend() { return g_backend.name; }

void force_backend(const char* name) {
    if (std::strcmp(name, "scalar") == 0) {
        g_backend = kScalar;
        return;
    }
#ifdef TRIS_HAVE_AVX2_KERNELS
    if (std::strcmp(name, "avx2") == 0) {
        if (!cpu_has_avx2())
            throw std::invalid_argument("avx2 kernels unavailable on this CPU");
        g_backend = kAvx2;
        return;
    }
#endif
    throw std::invalid_argument(std::string("unknown kernel backend: ") + name);
}

}  // namespace tris::kernels
