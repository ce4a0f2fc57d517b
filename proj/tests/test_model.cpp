#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "test_support.hpp"
#include "tris/model.hpp"

using namespace tris;
using namespace tris::testing;

TEST_CASE("single-user single-antenna SINR is |hf|^2 / sigma^2") {
    ChannelSet ch;
    ch.n = 1;
    ch.h_id = {{cplx(2.0, 0.0)}};
    SystemBudgets b = unit_budgets(1);
    b.sigma2_id[0] = 0.5;

    Beamformer bf = Beamformer::zero(1, 1, 0);
    bf.f_id[0] = {cplx(0.0, 3.0)};
    CHECK(sinr(0, bf, ch, b) == doctest::Approx(72.0));
    CHECK(sum_rate(bf, ch, b) == doctest::Approx(std::log2(73.0)));
}

TEST_CASE("model quantities match the stacked selection-matrix oracle") {
    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3, num_id = 2, num_eh = 2;
        const ChannelSet ch = random_channels(rng, n, num_id, num_eh);
        SystemBudgets b = unit_budgets(num_id, 1.0, 0.1);
        b.zeta = 0.7;
        b.sigma2_id = {0.3, 1.7};
        const Beamformer bf = random_beamformer(rng, n, num_id, num_eh);

        for (int k = 0; k < num_id; ++k)
            CHECK(sinr(k, bf, ch, b) ==
                  doctest::Approx(stacked_sinr(k, bf, ch, b)).epsilon(1e-12));
        for (int g = 0; g < num_eh; ++g)
            CHECK(harvested_energy(g, bf, ch, b) ==
                  doctest::Approx(stacked_harvested(g, bf, ch, b)).epsilon(1e-12));
        for (int ant = 0; ant < n; ++ant)
            CHECK(per_antenna_power(ant, bf) ==
                  doctest::Approx(stacked_antenna_power(ant, bf)).epsilon(1e-12));
    }
}

TEST_CASE("antenna powers sum to the stacked norm") {
    Rng rng(22);
    const Beamformer bf = random_beamformer(rng, 5, 2, 1);
    double total = 0.0;
    for (int ant = 0; ant < 5; ++ant) total += per_antenna_power(ant, bf);
    CHECK(total == doctest::Approx(norm2sq(bf.stacked())).epsilon(1e-12));
}

TEST_CASE("common phase rotation leaves SINR and EH unchanged") {
    Rng rng(23);
    const ChannelSet ch = random_channels(rng, 4, 2, 1);
    const SystemBudgets b = unit_budgets(2);
    Beamformer bf = random_beamformer(rng, 4, 2, 1);
    const double s0 = sinr(0, bf, ch, b);
    const double e0 = total_harvested(bf, ch, b);

    const cplx rot = std::polar(1.0, 1.234);
    for (auto& f : bf.f_id)
        for (auto& v : f) v *= rot;
    for (auto& f : bf.f_eh)
        for (auto& v : f) v *= rot;
    CHECK(sinr(0, bf, ch, b) == doctest::Approx(s0).epsilon(1e-12));
    CHECK(total_harvested(bf, ch, b) == doctest::Approx(e0).epsilon(1e-12));
}

TEST_CASE("stacked / unstack round trip") {
    Rng rng(24);
    const Beamformer bf = random_beamformer(rng, 3, 2, 2);
    const CVec f = bf.stacked();
    REQUIRE(f.size() == 12);
    const Beamformer back = Beamformer::unstack(f, 3, 2, 2);
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 3; ++i) CHECK(back.f_id[k][i] == bf.f_id[k][i]);
    for (int g = 0; g < 2; ++g)
        for (int i = 0; i < 3; ++i) CHECK(back.f_eh[g][i] == bf.f_eh[g][i]);
    // beam ordering: information beams first
    CHECK(f[0] == bf.f_id[0][0]);
    CHECK(f[3 * 2] == bf.f_eh[0][0]);
}

TEST_CASE("feasibility report flags violations correctly") {
    ChannelSet ch;
    ch.n = 1;
    ch.h_id = {{cplx(1.0)}};
    ch.h_eh = {{cplx(1.0)}};
    SystemBudgets b = unit_budgets(1, 1.0, 0.5);

    Beamformer ok = Beamformer::zero(1, 1, 1);
    ok.f_id[0] = {cplx(0.5)};
    ok.f_eh[0] = {cplx(0.7)};
    CHECK(check_feasibility(ok, ch, b, 1e-9).feasible);

    Beamformer hot = ok;
    hot.f_id[0] = {cplx(1.5)};  // antenna power 1.5^2 + 0.7^2 > 1
    const auto rep = check_feasibility(hot, ch, b, 1e-9);
    CHECK_FALSE(rep.feasible);
    CHECK(rep.max_power_violation > 0.0);

    Beamformer cold = Beamformer::zero(1, 1, 1);
    const auto rep2 = check_feasibility(cold, ch, b, 1e-9);
    CHECK_FALSE(rep2.feasible);
    CHECK(rep2.eh_shortfall > 0.0);
}

TEST_CASE("budget validation rejects bad parameters") {
    SystemBudgets b = unit_budgets(2);
    b.p_t = -1.0;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    b = unit_budgets(2);
    b.zeta = 0.0;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    b = unit_budgets(2);
    b.weights.pop_back();
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
}
