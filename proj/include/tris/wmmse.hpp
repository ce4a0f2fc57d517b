// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_WMMSE_HPP
#define TRIS_WMMSE_HPP

#include <vector>

#include "tris/model.hpp"

namespace tris {

// WMMSE auxiliary scalars plus the assembled quadratic-form coefficients of
// the convexified beamforming subproblem. The stacked objective matrix is
// I_{K+G} (x) m_obj and the stacked EH matrix is I_{K+G} (x) m_eh; only the
// N x N block representatives are stored.
struct SurrogateState {
    std::vector<cplx> beta;     // MMSE receive coefficients
    std::vector<double> omega;  // MSE weights, 1 + SINR at the fixed point
    HermMat m_obj;  // sum_k w_k omega_k |beta_k|^2 h_{I,k} h_{I,k}^H
    HermMat m_eh;   // sum_g h_{E,g} h_{E,g}^H (efficiency-free)
    CVec b3;        // stacked linear term, zero on the energy segments
    double c2 = 0.0;
    int n = 0;
    int num_id = 0;
    int num_eh = 0;
};

std::vector<cplx> update_beta(const Beamformer& bf, const ChannelSet& ch,
                              const SystemBudgets& budgets);

// omega_k = 1 + SINR_k, the analytic inner maximizer of the rate identity
std::vector<double> update_omega(const Beamformer& bf, const ChannelSet& ch,
                                 const SystemBudgets& budgets);

// sum_k w_k [log omega_k - omega_k MSE_k + 1] / log(base); equals sum_rate
// at (beta*, omega*)
double surrogate_value(const Beamformer& bf, const std::vector<cplx>& beta,
                       const std::vector<double>& omega, const ChannelSet& ch,
                       const SystemBudgets& budgets, double log_base = 2.0);

SurrogateState assemble_quadratics(const std::vector<cplx>& beta,
                                   const std::vector<double>& omega,
                                   const ChannelSet& ch,
                                   const SystemBudgets& budgets);

// -f^H B9 f + 2 Re{b3^H f} + c2 evaluated through the block structure
double surrogate_quadratic(const SurrogateState& st, const CVec& f_ie);

// Per-antenna-feasible scaled matched filters: all beams proportional to
// their channels, scaled so the busiest antenna sits at margin * P_t; if the
// EH constraint is still short, energy beams are boosted to the per-antenna
// limit. Throws std::runtime_error if Q_t remains unreachable.
Beamformer init_matched_filter(const ChannelSet& ch, const SystemBudgets& budgets,
                               double margin = 0.9);

}  // namespace tris

#endif
