// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tris {

void UpaGeometry::validate() const {
    if (n_h < 1 || n_v < 1) throw std::invalid_argument("UpaGeometry: n_h, n_v must be >= 1");
    if (!(spacing > 0.0)) throw std::invalid_argument("UpaGeometry: spacing must be > 0");
    if (!(wavelength > 0.0)) throw std::invalid_argument("UpaGeometry: wavelength must be > 0");
}

void ChannelParams::validate() const {
    if (!(c0 > 0.0)) throw std::invalid_argument("ChannelParams: c0 must be > 0");
    if (alpha < 0.0) throw std::invalid_argument("ChannelParams: alpha must be >= 0");
    if (rician_kappa < 0.0) throw std::invalid_argument("ChannelParams: kappa must be >= 0");
}

CVec steering_vector(const UpaGeometry& geom, double theta, double psi) {
    geom.validate();
    const double base = -2.0 * std::numbers::pi / geom.wavelength * geom.spacing * std::sin(theta);
    const double ph_h = base * std::cos(psi);  // horizontal progressive phase
    const double ph_v = base * std::sin(psi);  // vertical progressive phase
    CVec v(static_cast<std::size_t>(geom.size()));
    for (int mh = 0; mh < geom.n_h; ++mh) {
        for (int mv = 0; mv < geom.n_v; ++mv) {
            const double ph = ph_h * mh + ph_v * mv;
            v[static_cast<std::size_t>(mh) * geom.n_v + mv] = {std::cos(ph), std::sin(ph)};
        }
    }
    return v;
}

CVec draw_channel(const UpaGeometry& geom, const ChannelParams& params,
                  double distance, double theta, double psi, Rng& rng) {
    params.validate();
    if (!(distance > 0.0)) throw std::invalid_argument("draw_channel: distance must be > 0");
    const double pathloss = params.c0 * std::pow(distance, -params.alpha);
    const double w_los = std::sqrt(params.rician_kappa / (params.rician_kappa + 1.0));
    const double w_nlos = std::sqrt(1.0 / (params.rician_kappa + 1.0));
    CVec h = steering_vector(geom, theta, psi);
    CVec nlos = rng.cn01_vec(h.size());
    const double amp = std::sqrt(pathloss);
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] = amp * (w_los * h[i] + w_nlos * nlos[i]);
    }
    return h;
}

namespace {

struct Placement {
    double distance;  // 3-D distance from the transceiver
    double theta;     // elevation AoD from broadside
    double psi;       // azimuth AoD
};

Placement place_user(const Scenario& sc, double rmin, double rmax, Rng& rng) {
    const double half = sc.sector_deg * 0.5 * std::numbers::pi / 180.0;
    const double r = rng.uniform(rmin, rmax);  // ground-plane radius
    const double az = rng.uniform(-half, half);
    const double dz = sc.tx_height - sc.user_height;
    const double dist = std::hypot(r, dz);
    // broadside points at the user field; elevation measured from the
    // downward-tilted normal
    const double theta = std::atan2(r, dz);
    return {dist, theta, az};
}

}  // namespace

ChannelSet draw_scenario_channels(const Scenario& sc) {
    sc.geom.validate();
    if (sc.num_id < 0 || sc.num_eh < 0)
        throw std::invalid_argument("scenario: negative user count");

    Rng root(sc.seed);
    Rng place_rng = root.fork("placement");
    Rng fade_rng = root.fork("channel");

    ChannelSet ch;
    ch.n = sc.geom.size();
    ChannelParams id_params{sc.c0, sc.alpha_id, sc.rician_kappa};
    ChannelParams eh_params{sc.c0, sc.alpha_eh, sc.rician_kappa};
    ch.h_id.reserve(sc.num_id);
    for (int k = 0; k < sc.num_id; ++k) {
        const Placement p = place_user(sc, sc.id_range_min, sc.id_range_max, place_rng);
        ch.h_id.push_back(draw_channel(sc.geom, id_params, p.distance, p.theta, p.psi, fade_rng));
    }
    ch.h_eh.reserve(sc.num_eh);
    for (int g = 0; g < sc.num_eh; ++g) {
        const Placement p = place_user(sc, sc.eh_range_min, sc.eh_range_max, place_rng);
        ch.h_eh.push_back(draw_channel(sc.geom, eh_params, p.distance, p.theta, p.psi, fade_rng));
    }
    return ch;
}

}  // namespace tris
