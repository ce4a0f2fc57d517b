// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tris {

SystemBudgets make_budgets(const Scenario& sc, const ChannelSet& ch) {
    SystemBudgets b;
    b.p_t = sc.p_t;
    b.zeta = sc.zeta;
    b.sigma2_id.assign(ch.num_id(), sc.noise_power);
    b.weights.assign(ch.num_id(), 1.0);
    if (sc.qt_override >= 0.0) {
        b.q_t = sc.qt_override;
    } else if (ch.num_eh() > 0) {
        // harvest of full-power matched-filter energy beams
        Beamformer mf;
        mf.n = ch.n;
        mf.f_eh = ch.h_eh;
        double peak = 0.0;
        for (int n = 0; n < ch.n; ++n) peak = std::max(peak, per_antenna_power(n, mf));
        if (peak > 0.0) {
            const double s = std::sqrt(sc.p_t / peak);
            for (auto& f : mf.f_eh) scale(s, f);
            b.q_t = sc.qt_fraction * total_harvested(mf, ch, b);
        }
    }
    return b;
}

namespace {

// The splitting solver's penalty rho is calibrated for O(1) problems, while
// scenario-scale subproblems mix milliwatt budgets with enormous surrogate
// curvature. Rescale to a unit per-antenna budget and unit mean curvature
// before solving: f = sqrt(p_t) f~ and the objective divided by mu.
struct ScaledInner {
    InnerProblem problem;
    double s = 1.0;   // variable scale
    double mu = 1.0;  // objective scale
};

ScaledInner scale_inner(const InnerProblem& raw) {
    ScaledInner sc;
    sc.s = std::sqrt(raw.p_t);
    double diag = 0.0;
    for (int i = 0; i < raw.n; ++i) diag += raw.m_obj(i, i).real();
    sc.mu = std::max(sc.s * sc.s * diag / raw.n, 1e-300);

    InnerProblem& p = sc.problem;
    p.n = raw.n;
    p.num_id = raw.num_id;
    p.num_eh = raw.num_eh;
    p.p_t = 1.0;
    p.c2 = raw.c2 / sc.mu;
    p.m_obj = raw.m_obj;
    const double qscale = sc.s * sc.s / sc.mu;
    for (int j = 0; j < raw.n; ++j)
        for (int i = 0; i < raw.n; ++i) p.m_obj(i, j) *= qscale;
    p.b3 = raw.b3;
    scale(sc.s / sc.mu, p.b3);
    p.lin.b4 = raw.lin.b4;
    scale(sc.s / sc.mu, p.lin.b4);
    p.lin.c3 = raw.lin.c3 / sc.mu;
    return sc;
}

}  // namespace

OuterResult run_outer(const ChannelSet& ch, const SystemBudgets& budgets,
                      const OuterConfig& cfg) {
    budgets.validate();
    OuterResult res;
    Beamformer bf = init_matched_filter(ch, budgets);
    const double qt_scaled = budgets.q_t / budgets.zeta;

    double prev_rate = sum_rate(bf, ch, budgets, cfg.log_base);
    AdmmState warm;
    double warm_mu = 0.0;
    res.trace.reserve(cfg.max_iter);

    for (int t = 1; t <= cfg.max_iter; ++t) {
        const auto beta = update_beta(bf, ch, budgets);
        const auto omega = update_omega(bf, ch, budgets);
        const SurrogateState state = assemble_quadratics(beta, omega, ch, budgets);
        const LinearizedEhConstraint lin = linearize_eh(bf, state, qt_scaled);
        const InnerProblem problem = make_inner_problem(state, lin, budgets.p_t);

        CVec candidate;
        int inner_iters = 0;
        double primal_resid = 0.0;
        double step_resid = 0.0;
        if (cfg.inner == InnerSolver::Admm) {
            const ScaledInner scaled = scale_inner(problem);
            if (!warm.f_ie.empty() && warm_mu > 0.0) {
                // the dual has objective-gradient units; re-express it in
                // this iteration's objective scale
                scale(warm_mu / scaled.mu, warm.tau);
            }
            AdmmSolver solver(scaled.problem, cfg.admm);
            AdmmState st = solver.solve(warm.f_ie.empty() ? nullptr : &warm);
            candidate = st.w;
            scale(scaled.s, candidate);
            inner_iters = st.iter;
            primal_resid = st.trace.empty() ? 0.0 : st.trace.back().primal_sq;
            step_resid = st.trace.empty() ? 0.0 : st.trace.back().step_sq;
            warm = std::move(st);
            warm_mu = scaled.mu;
        } else {
            const CVec start = bf.stacked();
            OracleResult orc = solve_inner_reference(problem, cfg.oracle_grad_tol,
                                                  cfg.oracle_max_iter, &start);
            candidate = std::move(orc.f);
            inner_iters = orc.iters;
        }
        // land the iterate exactly on the constraint intersection; the MM
        // minorant then guarantees the true EH constraint
        candidate = project_onto_constraints(candidate, problem.n,
                                             problem.num_beams(), budgets.p_t,
                                             lin);

        // ascent safeguard: keep the previous iterate if the inner solve
        // failed to improve the surrogate
        const double cand_val = surrogate_quadratic(state, candidate);
        const double prev_val = surrogate_quadratic(state, bf.stacked());
        if (cand_val >= prev_val) {
            bf = Beamformer::unstack(candidate, ch.n, ch.num_id(), ch.num_eh());
        }

        const double rate = sum_rate(bf, ch, budgets, cfg.log_base);
        res.inner_iters_total += inner_iters;
        res.trace.push_back({t,
                             surrogate_value(bf, beta, omega, ch, budgets, cfg.log_base),
                             rate, inner_iters, primal_resid, step_resid});
        res.outer_iters = t;
        if (std::abs(rate - prev_rate) < cfg.rel_tol * std::max(1.0, std::abs(rate))) {
            prev_rate = rate;
            res.converged = true;
            break;
        }
        prev_rate = rate;
    }
    res.bf = std::move(bf);
    res.final_sum_rate = prev_rate;
    return res;
}

OuterResult run_outer(const Scenario& sc, const OuterConfig& cfg) {
    const ChannelSet ch = draw_scenario_channels(sc);
    return run_outer(ch, make_budgets(sc, ch), cfg);
}

}  // namespace tris
