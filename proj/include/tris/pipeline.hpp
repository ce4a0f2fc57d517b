// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_PIPELINE_HPP
#define TRIS_PIPELINE_HPP

#include <vector>

#include "tris/admm.hpp"
#include "tris/oracle.hpp"
#include "tris/wmmse.hpp"

namespace tris {

enum class InnerSolver { Admm, Oracle };

struct OuterConfig {
    double rel_tol = 1e-5;  // on the sum-rate improvement
    int max_iter = 100;
    double log_base = 2.0;
    InnerSolver inner = InnerSolver::Admm;
    AdmmConfig admm;
    double oracle_grad_tol = 1e-9;
    int oracle_max_iter = 100000;
};

struct OuterTraceRow {
    int outer_iter;
    double surrogate;
    double sum_rate;
    int inner_iters;
    double primal_resid;
    double step_resid;
};

struct OuterResult {
    Beamformer bf;
    std::vector<OuterTraceRow> trace;
    bool converged = false;
    int outer_iters = 0;
    long long inner_iters_total = 0;
    double final_sum_rate = 0.0;
};

// Budgets derived from the scenario; when qt_override < 0, Q_t defaults to
// qt_fraction of the harvest achieved by full-power matched-filter energy
// beams.
SystemBudgets make_budgets(const Scenario& sc, const ChannelSet& ch);

// Full outer loop: beta/omega updates, quadratic assembly, MM
// linearization, inner solve, with a surrogate-ascent safeguard so the true
// sum-rate trace is monotone. Every accepted iterate is projected onto the
// exact constraint set. Throws std::runtime_error when no feasible
// initialization exists.
OuterResult run_outer(const ChannelSet& ch, const SystemBudgets& budgets,
                      const OuterConfig& cfg);

// Convenience overload drawing the channels from the scenario.
OuterResult run_outer(const Scenario& sc, const OuterConfig& cfg);

}  // namespace tris

#endif
