// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_MM_HPP
#define TRIS_MM_HPP

#include "tris/wmmse.hpp"

namespace tris {

// Tangent minorant of the harvested-energy quadratic at the previous
// iterate: the constraint reads -2 Re{b4^H f_IE} - c3 <= 0 with
// b4 = B10 f_IE0 and c3 = -(Q_t/zeta + f_IE0^H B10 f_IE0). The EH threshold
// is pre-divided by zeta so the quadratic blocks stay efficiency-free.
struct LinearizedEhConstraint {
    CVec b4;
    double c3 = 0.0;

    // -2 Re{b4^H f} - c3; feasible iff <= 0
    double violation(const CVec& f_ie) const {
        return -2.0 * kernels::dotc(b4.data(), f_ie.data(), b4.size()).real() - c3;
    }

    // value of the affine minorant of f^H B10 f at f; c3 encodes the
    // expansion point through f0^H B10 f0 = -c3 - qt_scaled
    double minorant(const CVec& f_ie, double qt_scaled) const {
        return 2.0 * kernels::dotc(b4.data(), f_ie.data(), b4.size()).real() +
               c3 + qt_scaled;
    }
};

LinearizedEhConstraint linearize_eh(const Beamformer& prev,
                                    const SurrogateState& state,
                                    double qt_scaled);

// f^H B10 f through the block structure (the true EH quadratic, zeta-free)
double eh_quadratic(const SurrogateState& state, const CVec& f_ie);

}  // namespace tris

#endif
