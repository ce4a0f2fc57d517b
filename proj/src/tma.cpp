// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/tma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tris {

TmaTiming symbol_to_timing(const TmaSymbol& sym, double period,
                           bool mirrored_branch) {
    if (!(sym.amplitude_max > 0.0))
        throw std::invalid_argument("tma: amplitude_max must be > 0");
    if (sym.amplitude < 0.0 || sym.amplitude > sym.amplitude_max)
        throw std::invalid_argument("tma: amplitude must be in [0, amplitude_max]");
    if (!(period > 0.0)) throw std::invalid_argument("tma: period must be > 0");

    const double pi = std::numbers::pi;
    double angle = std::asin(sym.amplitude / sym.amplitude_max);  // [0, pi/2]
    if (mirrored_branch) angle = pi - angle;
    TmaTiming tm;
    tm.period = period;
    tm.tau = period * angle / pi;
    // pi (2 t_on + tau) / T_c = phi + 2 k pi, with k the integer that lands
    // t_on in [0, T_c)
    double t_on = std::fmod((sym.phase * period / pi - tm.tau) * 0.5, period);
    if (t_on < 0.0) t_on += period;
    tm.t_on = t_on;
    return tm;
}

std::complex<double> waveform(const TmaTiming& timing, double t) {
    if (timing.tau >= timing.period) return {1.0, 0.0};
    if (timing.tau <= 0.0) return {-1.0, 0.0};
    double u = std::fmod(t - timing.t_on, timing.period);
    if (u < 0.0) u += timing.period;
    return (u > 0.0 && u <= timing.tau) ? std::complex<double>{1.0, 0.0}
                                        : std::complex<double>{-1.0, 0.0};
}

std::complex<double> first_harmonic(const TmaTiming& timing) {
    const double pi = std::numbers::pi;
    const double mag = (2.0 / pi) * std::sin(pi * timing.tau / timing.period);
    const double ph = -pi * (2.0 * timing.t_on + timing.tau) / timing.period;
    return {mag * std::cos(ph), mag * std::sin(ph)};
}

}  // namespace tris
