// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_ORACLE_HPP
#define TRIS_ORACLE_HPP

#include <utility>

#include "tris/admm.hpp"

namespace tris {

// Residuals are normalized by the natural scale of each condition so that
// closed-form solutions report ~machine-epsilon values regardless of the
// raw magnitudes of the problem data.
struct KktReport {
    double stationarity_residual = 0.0;
    double primal_violation = 0.0;
    double complementarity_residual = 0.0;
    double multiplier = 0.0;

    double max_residual() const;
};

// min x^H D x - 2 Re{d^H x} + d0  s.t.  x^H Dbar x - 2 Re{dbar^H x} + dbar0 <= 0
// with D PD and Dbar PSD. CASE-I tries the unconstrained minimizer; CASE-II
// finds the unique positive multiplier by safeguarded Newton (bisection
// fallback) on the monotone scalar constraint equation.
std::pair<CVec, KktReport> solve_qcqp_1c(const HermMat& D, const CVec& d,
                                         double d0, const HermMat& Dbar,
                                         const CVec& dbar, double dbar0);

struct OracleResult {
    CVec f;
    double objective = 0.0;
    int iters = 0;
};

// Euclidean projection onto the intersection of the N per-antenna balls and
// the linearized EH halfspace, via Dykstra's alternating projections.
// Throws std::runtime_error when the intersection is certified empty.
CVec project_onto_constraints(const CVec& v, int n, int num_beams, double p_t,
                              const LinearizedEhConstraint& lin,
                              double tol = 1e-12, int max_iter = 100000);

// Reference solver for the convexified subproblem: projected gradient
// descent with exact line search, feasible iterates maintained by Dykstra
// projection. Terminates at gradient-mapping norm <= grad_tol or max_iter.
OracleResult solve_inner_reference(const InnerProblem& p,
                                   double grad_tol = 1e-9,
                                   int max_iter = 100000,
                                   const CVec* warm = nullptr);

// KKT check of a closed-form beamformer update (the EH-halfspace
// subproblem); m_bar_block is the N x N block of B9bar and b3bar the
// shifted linear term.
KktReport verify_kkt_f_update(const CVec& x, const HermMat& m_bar_block,
                              const CVec& b3bar,
                              const LinearizedEhConstraint& lin);

// KKT check of a per-antenna consensus update against the ball constraint.
KktReport verify_kkt_w_update(const CVec& w_n, const CVec& b6n, double p_t);

}  // namespace tris

#endif
