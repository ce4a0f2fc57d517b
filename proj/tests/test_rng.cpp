#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "tris/rng.hpp"

using namespace tris;

TEST_CASE("same seed reproduces the stream bit-identically") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds and different fork labels diverge") {
    Rng a(1), b(2);
    CHECK(a.next_u64() != b.next_u64());

    Rng root(9);
    Rng f1 = root.fork("channel");
    Rng f2 = root.fork("placement");
    CHECK(f1.next_u64() != f2.next_u64());
}

TEST_CASE("fork does not advance the parent") {
    Rng a(7), b(7);
    (void)a.fork("anything");
    CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("forks are reproducible") {
    Rng a(13), b(13);
    Rng fa = a.fork("x");
    Rng fb = b.fork("x");
    for (int i = 0; i < 10; ++i) CHECK(fa.next_u64() == fb.next_u64());
}

TEST_CASE("uniform stays in range and has the right mean") {
    Rng rng(100);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(5e-3));

    const double v = rng.uniform(-2.0, 6.0);
    CHECK(v >= -2.0);
    CHECK(v < 6.0);
}

TEST_CASE("normal moments") {
    Rng rng(101);
    double s1 = 0.0, s2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        s1 += x;
        s2 += x * x;
    }
    CHECK(std::abs(s1 / n) < 0.02);
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("cn01 has unit power split evenly across parts") {
    Rng rng(102);
    double p = 0.0, pr = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const cplx z = rng.cn01();
        p += std::norm(z);
        pr += z.real() * z.real();
    }
    CHECK(p / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(pr / n == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("cn01_vec handles the empty case") {
    Rng rng(103);
    CHECK(rng.cn01_vec(0).empty());
    CHECK(rng.cn01_vec(5).size() == 5);
}
