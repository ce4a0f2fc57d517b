#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "tris/kernels.hpp"
#include "tris/rng.hpp"

using namespace tris;
using kernels::cplx;

namespace {

std::vector<cplx> random_vec(Rng& rng, std::size_t n) {
    std::vector<cplx> v(n);
    for (auto& x : v) x = rng.cn01();
    return v;
}

}  // namespace

TEST_CASE("scalar dotc matches hand results") {
    const cplx a[] = {{1.0, 2.0}, {0.0, -1.0}};
    const cplx b[] = {{3.0, 0.0}, {2.0, 2.0}};
    // conj(1+2i)*3 + conj(-i)*(2+2i) = (3-6i) + (-2+2i)
    const cplx got = kernels::scalar::dotc(a, b, 2);
    CHECK(got.real() == doctest::Approx(1.0));
    CHECK(got.imag() == doctest::Approx(-4.0));
    CHECK(kernels::scalar::dotc(a, b, 0) == cplx(0.0));
}

TEST_CASE("scalar norm2sq and scale") {
    cplx x[] = {{3.0, 4.0}, {0.0, 2.0}};
    CHECK(kernels::scalar::norm2sq(x, 2) == doctest::Approx(29.0));
    kernels::scalar::scale(0.5, x, 2);
    CHECK(x[0].real() == doctest::Approx(1.5));
    CHECK(x[1].imag() == doctest::Approx(1.0));
}

TEST_CASE("scalar axpy") {
    const cplx x[] = {{1.0, 0.0}, {0.0, 1.0}};
    cplx y[] = {{0.0, 0.0}, {1.0, 1.0}};
    kernels::scalar::axpy(cplx(0.0, 2.0), x, y, 2);
    CHECK(y[0] == cplx(0.0, 2.0));
    CHECK(y[1] == cplx(-1.0, 1.0));
}

namespace {

// column-major Hermitian PD matrix n I + G G^H
std::vector<cplx> random_pd(Rng& rng, std::size_t n) {
    auto g = random_vec(rng, n * n);
    std::vector<cplx> a(n * n, cplx(0.0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            cplx s(0.0);
            for (std::size_t k = 0; k < n; ++k) s += g[k * n + i] * std::conj(g[k * n + j]);
            a[j * n + i] = s;
        }
        a[j * n + j] += static_cast<double>(n);
    }
    return a;
}

}  // namespace

TEST_CASE("scalar cholesky factor and solve recover a known system") {
    Rng rng(19);
    const std::size_t n = 8;
    auto a = random_pd(rng, n);
    const auto x_true = random_vec(rng, n);
    // b = A x, two stacked copies for the multi-rhs path
    std::vector<cplx> b(2 * n, cplx(0.0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) b[i] += a[j * n + i] * x_true[j];
    std::copy(b.begin(), b.begin() + n, b.begin() + n);

    auto l = a;
    CHECK(kernels::scalar::chol_factor(l.data(), n) == -1);
    kernels::scalar::chol_solve(l.data(), n, b.data(), 2);
    for (std::size_t i = 0; i < 2 * n; ++i)
        CHECK(std::abs(b[i] - x_true[i % n]) <= 1e-10);
}

TEST_CASE("scalar cholesky factor reports the failing pivot") {
    // diag(1, -1): pivot 1 is negative
    std::vector<cplx> a = {cplx(1.0), cplx(0.0), cplx(0.0), cplx(-1.0)};
    CHECK(kernels::scalar::chol_factor(a.data(), 2) == 1);
}

#ifdef TRIS_HAVE_AVX2_KERNELS
TEST_CASE("avx2 cholesky kernels agree with scalar") {
    if (std::string(kernels::active_backend()) != "avx2") return;  // no AVX2 CPU

    Rng rng(23);
    for (std::size_t n : {1u, 2u, 5u, 16u, 33u}) {
        const auto a = random_pd(rng, n);
        auto l_ref = a, l_avx = a;
        CHECK(kernels::scalar::chol_factor(l_ref.data(), n) == -1);
        CHECK(kernels::avx2::chol_factor(l_avx.data(), n) == -1);
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i * n + i]));
        // compare lower triangles only; the strict upper part is scratch
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = j; i < n; ++i)
                CHECK(std::abs(l_ref[j * n + i] - l_avx[j * n + i]) <= 1e-12 * scale);

        const std::size_t nrhs = 3;
        auto b_ref = random_vec(rng, nrhs * n);
        auto b_avx = b_ref;
        kernels::scalar::chol_solve(l_ref.data(), n, b_ref.data(), nrhs);
        kernels::avx2::chol_solve(l_ref.data(), n, b_avx.data(), nrhs);
        for (std::size_t i = 0; i < nrhs * n; ++i)
            CHECK(std::abs(b_ref[i] - b_avx[i]) <=
                  1e-11 * (1.0 + std::abs(b_ref[i])));
    }
}

TEST_CASE("avx2 variants agree with scalar on odd and even lengths") {
    if (std::string(kernels::active_backend()) != "avx2") return;  // no AVX2 CPU

    Rng rng(7);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 16u, 17u, 33u, 128u}) {
        auto a = random_vec(rng, n);
        auto b = random_vec(rng, n);

        const cplx d_ref = kernels::scalar::dotc(a.data(), b.data(), n);
        const cplx d_avx = kernels::avx2::dotc(a.data(), b.data(), n);
        CHECK(std::abs(d_ref - d_avx) <= 1e-12 * (1.0 + std::abs(d_ref)));

        const double n_ref = kernels::scalar::norm2sq(a.data(), n);
        const double n_avx = kernels::avx2::norm2sq(a.data(), n);
        CHECK(n_avx == doctest::Approx(n_ref).epsilon(1e-13));

        auto y_ref = b, y_avx = b;
        const cplx alpha = rng.cn01();
        kernels::scalar::axpy(alpha, a.data(), y_ref.data(), n);
        kernels::avx2::axpy(alpha, a.data(), y_avx.data(), n);
        auto s_ref = a, s_avx = a;
        kernels::scalar::scale(0.75, s_ref.data(), n);
        kernels::avx2::scale(0.75, s_avx.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(y_ref[i] - y_avx[i]) <= 1e-13);
            CHECK(std::abs(s_ref[i] - s_avx[i]) <= 1e-15);
        }
    }
}
#endif

TEST_CASE("backend dispatch is switchable and validated") {
    const std::string before = kernels::active_backend();
    kernels::force_backend("scalar");
    CHECK(std::string(kernels::active_backend()) == "scalar");
    CHECK_THROWS_AS(kernels::force_backend("nonsense"), std::invalid_argument);
    kernels::force_backend(before.c_str());
    CHECK(std::string(kernels::active_backend()) == before);
}
