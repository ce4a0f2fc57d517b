// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_CHANNEL_HPP
#define TRIS_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "tris/linalg.hpp"
#include "tris/rng.hpp"

namespace tris {

struct UpaGeometry {
    int n_h = 4;
    int n_v = 4;
    double spacing = 0.5;     // meters
    double wavelength = 1.0;  // meters

    int size() const { return n_h * n_v; }
    void validate() const;
};

struct ChannelParams {
    double c0 = 1e-3;          // linear power gain at d0 = 1 m
    double alpha = 3.2;        // path-loss exponent
    double rician_kappa = 2.0; // linear Rician factor

    void validate() const;
};

struct ChannelSet {
    std::vector<CVec> h_id;
    std::vector<CVec> h_eh;
    int n = 0;

    int num_id() const { return static_cast<int>(h_id.size()); }
    int num_eh() const { return static_cast<int>(h_eh.size()); }
};

// Scenario: geometry, user counts, power/energy budgets, channel statistics
// and the RNG seed. Distances in meters, powers in watts.
struct Scenario {
    UpaGeometry geom;
    int num_id = 2;
    int num_eh = 2;

    double p_t = 0.01;           // per-antenna power limit (10 dBm)
    double noise_power = 1e-12;  // ID-user noise (-90 dBm)
    double zeta = 1.0;           // EH efficiency
    // Q_t: if >= 0, absolute watts; otherwise set to qt_fraction of the
    // harvest achieved by full-power matched-filter energy beams.
    double qt_override = -1.0;
    double qt_fraction = 0.5;

    double c0 = 1e-3;
    double rician_kappa = 2.0;
    double alpha_id = 3.2;
    double alpha_eh = 2.2;

    double id_range_min = 20.0;
    double id_range_max = 50.0;
    double eh_range_min = 3.0;
    double eh_range_max = 8.0;
    double user_height = 1.5;
    double tx_height = 4.5;
    double sector_deg = 120.0;  // ID/EH users uniform in azimuth sector

    std::uint64_t seed = 1;
};

// UPA steering vector: Kronecker product of the horizontal and vertical
// progressive-phase factors. theta is the elevation AoD measured from the
// array broadside, psi the azimuth AoD. Unit-modulus entries, length N,
// element (m_h, m_v) stored at index m_h * n_v + m_v.
CVec steering_vector(const UpaGeometry& geom, double theta, double psi);

// Rician channel sqrt(C0 (d/d0)^-alpha) (sqrt(k/(k+1)) LoS + sqrt(1/(k+1)) NLoS).
CVec draw_channel(const UpaGeometry& geom, const ChannelParams& params,
                  double distance, double theta, double psi, Rng& rng);

// Places ID users in the configured annular sector, EH users near the
// transceiver, and draws all channels from the scenario's seeded stream.
ChannelSet draw_scenario_channels(const Scenario& sc);

}  // namespace tris

#endif
