// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_TMA_HPP
#define TRIS_TMA_HPP

#include <complex>

namespace tris {

// Default control-signal symbol duration for the 1-bit case.
inline constexpr double kDefaultTmaPeriod = 3e-6;  // seconds

// A synthesized transmit symbol: amplitude, phase and the per-element
// amplitude ceiling the timing map is normalized against.
struct TmaSymbol {
    double amplitude = 0.0;      // >= 0
    double phase = 0.0;          // radians
    double amplitude_max = 1.0;  // > 0
};

// 1-bit control timing: the 0-state pulse starts at t_on and lasts tau
// within a period of length `period`.
struct TmaTiming {
    double t_on = 0.0;
    double tau = 0.0;
    double period = kDefaultTmaPeriod;
};

// Maps (A, phi) to timing parameters. The arcsin ambiguity is resolved to
// the principal branch tau <= T_c/2 unless mirrored_branch is set.
// Throws std::invalid_argument when A > A_max.
TmaTiming symbol_to_timing(const TmaSymbol& sym, double period,
                           bool mirrored_branch = false);

// Phase state at time t in [0, T_c): +1 during the 0-state pulse, -1
// elsewhere, with cyclic wrap-around when t_on + tau exceeds the period.
std::complex<double> waveform(const TmaTiming& timing, double t);

// q = 1 Fourier coefficient of the control waveform:
// (2/pi) sin(pi tau / T_c) exp(-j pi (2 t_on + tau) / T_c).
std::complex<double> first_harmonic(const TmaTiming& timing);

}  // namespace tris

#endif
