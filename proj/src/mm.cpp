// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/mm.hpp"

namespace tris {

LinearizedEhConstraint linearize_eh(const Beamformer& prev,
                                    const SurrogateState& state,
                                    double qt_scaled) {
    LinearizedEhConstraint lin;
    const int nb = prev.num_beams();
    lin.b4.assign(static_cast<std::size_t>(prev.n) * nb, cplx(0.0));
    double quad0 = 0.0;
    for (int j = 0; j < nb; ++j) {
        const CVec seg = state.m_eh.mul(prev.beam(j));
        std::copy(seg.begin(), seg.end(),
                  lin.b4.begin() + static_cast<std::size_t>(j) * prev.n);
        quad0 += dotc(prev.beam(j), seg).real();
    }
    lin.c3 = -qt_scaled - quad0;
    return lin;
}

double eh_quadratic(const SurrogateState& state, const CVec& f_ie) {
    double q = 0.0;
    const int nb = state.num_id + state.num_eh;
    for (int j = 0; j < nb; ++j) {
        CVec seg(f_ie.begin() + static_cast<std::size_t>(j) * state.n,
                 f_ie.begin() + static_cast<std::size_t>(j + 1) * state.n);
        q += state.m_eh.quad_form(seg);
    }
    return q;
}

}  // namespace tris
