// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_ADMM_HPP
#define TRIS_ADMM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tris/mm.hpp"
#include "tris/model.hpp"

namespace tris {

// Data of the convexified beamforming subproblem (minimization form):
//   min f^H B9 f - 2 Re{b3^H f} - c2
//   s.t. -2 Re{b4^H f} - c3 <= 0,  per-antenna power <= P_t.
// B9 = I_{K+G} (x) m_obj; only the N x N block is stored.
struct InnerProblem {
    int n = 0;
    int num_id = 0;
    int num_eh = 0;
    HermMat m_obj;
    CVec b3;
    double c2 = 0.0;
    double p_t = 0.0;
    LinearizedEhConstraint lin;

    int num_beams() const { return num_id + num_eh; }
    int dim() const { return n * num_beams(); }

    // f^H B9 f - 2 Re{b3^H f} - c2
    double objective(const CVec& f_ie) const;
};

InnerProblem make_inner_problem(const SurrogateState& state,
                                const LinearizedEhConstraint& lin, double p_t);

struct AdmmConfig {
    double rho = 1.0;
    int max_iter = 300;
    double primal_tol = 1e-6;  // on ||f_ie - w||^2
    double step_tol = 1e-8;    // on ||delta f_ie||^2
    // Fill AdmmTraceRow::objective (one extra evaluation per iteration);
    // rows carry NaN there when disabled.
    bool trace_objective = false;
};

struct AdmmTraceRow {
    int iter;
    double step_sq;
    double primal_sq;
    double objective;
};

struct AdmmState {
    CVec f_ie;
    CVec w;
    CVec tau;
    double rho = 1.0;
    int iter = 0;
    bool converged = false;
    std::vector<AdmmTraceRow> trace;
};

class AdmmSolver {
  public:
    AdmmSolver(const InnerProblem& p, const AdmmConfig& cfg);

    // f-update: unconstrained minimizer of the augmented objective,
    // shifted along B9bar^{-1} b4 when the linearized EH constraint binds.
    // The shift coefficient has a closed form because the constraint is
    // affine. Throws on an unreachable constraint (b4 orthogonal to the
    // solve direction).
    CVec update_f(const CVec& w, const CVec& tau) const;

    // w-update: independent per-antenna ball projections of
    // b6 = f_ie + tau / rho.
    CVec update_w(const CVec& f_ie, const CVec& tau) const;

    // tau + rho (f_ie - w)
    CVec update_dual(const CVec& tau, const CVec& f_ie, const CVec& w) const;

    AdmmState solve(const AdmmState* warm = nullptr) const;

    double kappa_closed_form(const CVec& x0) const;

  private:
    const InnerProblem& p_;
    AdmmConfig cfg_;
    CholeskyFactor chol_;  // m_obj + rho/2 I, factored once and reused
    // B9bar^{-1} b4, computed on first use; iterates that never violate the
    // EH halfspace skip the extra solve entirely.
    mutable CVec binv_b4_;
    mutable double b4_binv_b4_ = 0.0;
    mutable bool binv_ready_ = false;
    void ensure_binv() const;
};

// Projection of the (K+G)-entry per-antenna slice onto the radius-sqrt(P_t)
// ball, applied to every antenna of a stacked vector.
CVec project_per_antenna(const CVec& v, int n, int num_beams, double p_t);

// Augmented Lagrangian value at (f, w, tau).
double augmented_lagrangian(const InnerProblem& p, double rho, const CVec& f,
                            const CVec& w, const CVec& tau);

// Runs ADMM and unstacks w (the per-antenna-feasible iterate).
std::pair<Beamformer, AdmmState> solve_inner(const InnerProblem& p,
                                             const AdmmConfig& cfg,
                                             const AdmmState* warm = nullptr);

}  // namespace tris

#endif
