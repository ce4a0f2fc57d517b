#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "tris/channel.hpp"

using namespace tris;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("steering vector is all ones at broadside") {
    UpaGeometry g{3, 2, 0.25, 1.0};
    const CVec a = steering_vector(g, 0.0, 0.0);
    REQUIRE(a.size() == 6);
    for (const auto& v : a) CHECK(std::abs(v - cplx(1.0)) <= 1e-14);
}

TEST_CASE("steering vector matches the per-element phase law") {
    UpaGeometry g{4, 3, 0.4, 0.8};
    const double theta = 0.7, psi = -1.1;
    const CVec a = steering_vector(g, theta, psi);
    REQUIRE(static_cast<int>(a.size()) == g.size());

    const double c = -2.0 * kPi / g.wavelength * g.spacing * std::sin(theta);
    for (int mh = 0; mh < g.n_h; ++mh) {
        for (int mv = 0; mv < g.n_v; ++mv) {
            const double phase = c * (std::cos(psi) * mh + std::sin(psi) * mv);
            const cplx want = std::polar(1.0, phase);
            CHECK(std::abs(a[mh * g.n_v + mv] - want) <= 1e-13);
        }
    }
}

TEST_CASE("steering entries are unit modulus") {
    UpaGeometry g{5, 5, 0.5, 1.0};
    const CVec a = steering_vector(g, 1.2, 2.9);
    for (const auto& v : a) CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("huge Rician factor collapses to the scaled LoS ray") {
    UpaGeometry g{2, 2, 0.5, 1.0};
    ChannelParams p;
    p.c0 = 1e-3;
    p.alpha = 3.0;
    p.rician_kappa = 1e16;
    Rng rng(5);
    const double d = 2.0, theta = 0.4, psi = 0.3;
    const CVec h = draw_channel(g, p, d, theta, psi, rng);
    const CVec a = steering_vector(g, theta, psi);
    const double gain = std::sqrt(p.c0 * std::pow(d, -p.alpha));
    for (std::size_t i = 0; i < h.size(); ++i)
        CHECK(std::abs(h[i] - gain * a[i]) <= 1e-6 * gain);
}

TEST_CASE("path loss scales element magnitudes by d^(-alpha/2)") {
    UpaGeometry g{2, 2, 0.5, 1.0};
    ChannelParams p;
    p.alpha = 3.2;
    p.rician_kappa = 1e16;  // deterministic so the ratio is exact
    Rng rng(6);
    const CVec h1 = draw_channel(g, p, 1.0, 0.2, 0.1, rng);
    const CVec h2 = draw_channel(g, p, 2.0, 0.2, 0.1, rng);
    const double ratio = std::abs(h1[0]) / std::abs(h2[0]);
    CHECK(ratio == doctest::Approx(std::pow(2.0, 1.6)).epsilon(1e-6));
}

TEST_CASE("pure-scatter channel has the right element power") {
    UpaGeometry g{2, 2, 0.5, 1.0};
    ChannelParams p;
    p.c0 = 1e-2;
    p.alpha = 2.0;
    p.rician_kappa = 0.0;
    Rng rng(7);
    const double d = 3.0;
    const double want = p.c0 * std::pow(d, -p.alpha);
    double power = 0.0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        const CVec h = draw_channel(g, p, d, 0.5, 0.5, rng);
        for (const auto& v : h) power += std::norm(v);
    }
    power /= trials * g.size();
    CHECK(power == doctest::Approx(want).epsilon(0.03));
}

TEST_CASE("rician mixing preserves average element power") {
    UpaGeometry g{3, 3, 0.5, 1.0};
    ChannelParams p;
    p.c0 = 1.0;
    p.alpha = 0.0;
    p.rician_kappa = 2.0;
    Rng rng(8);
    double power = 0.0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        const CVec h = draw_channel(g, p, 1.0, 0.3, -0.4, rng);
        for (const auto& v : h) power += std::norm(v);
    }
    power /= trials * g.size();
    CHECK(power == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("nonpositive distance is rejected") {
    UpaGeometry g{2, 2, 0.5, 1.0};
    ChannelParams p;
    Rng rng(9);
    CHECK_THROWS_AS(draw_channel(g, p, 0.0, 0.0, 0.0, rng), std::invalid_argument);
}

TEST_CASE("scenario draw is deterministic and correctly sized") {
    Scenario sc;
    sc.geom = {4, 4, 0.5, 1.0};
    sc.num_id = 3;
    sc.num_eh = 2;
    sc.seed = 77;

    const ChannelSet c1 = draw_scenario_channels(sc);
    const ChannelSet c2 = draw_scenario_channels(sc);
    REQUIRE(c1.num_id() == 3);
    REQUIRE(c1.num_eh() == 2);
    CHECK(c1.n == 16);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 16; ++i) CHECK(c1.h_id[k][i] == c2.h_id[k][i]);

    sc.seed = 78;
    const ChannelSet c3 = draw_scenario_channels(sc);
    CHECK(c1.h_id[0][0] != c3.h_id[0][0]);
}

TEST_CASE("EH users sit closer than ID users on average") {
    Scenario sc;
    sc.geom = {2, 2, 0.5, 1.0};
    sc.seed = 11;
    const ChannelSet ch = draw_scenario_channels(sc);
    // nearer users plus smaller exponent mean much stronger EH channels
    double id_p = 0.0, eh_p = 0.0;
    for (const auto& h : ch.h_id) id_p += norm2sq(h);
    for (const auto& h : ch.h_eh) eh_p += norm2sq(h);
    CHECK(eh_p / ch.num_eh() > id_p / ch.num_id());
}
