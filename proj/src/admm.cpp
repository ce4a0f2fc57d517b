// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/admm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tris {

double InnerProblem::objective(const CVec& f_ie) const {
    double quad = 0.0;
    for (int j = 0; j < num_beams(); ++j) {
        CVec seg(f_ie.begin() + static_cast<std::size_t>(j) * n,
                 f_ie.begin() + static_cast<std::size_t>(j + 1) * n);
        quad += m_obj.quad_form(seg);
    }
    return quad - 2.0 * kernels::dotc(b3.data(), f_ie.data(), b3.size()).real() - c2;
}

InnerProblem make_inner_problem(const SurrogateState& state,
                                const LinearizedEhConstraint& lin, double p_t) {
    InnerProblem p;
    p.n = state.n;
    p.num_id = state.num_id;
    p.num_eh = state.num_eh;
    p.m_obj = state.m_obj;
    p.b3 = state.b3;
    p.c2 = state.c2;
    p.p_t = p_t;
    p.lin = lin;
    return p;
}

namespace {

// x = B9bar^{-1} v via one N x N Hermitian solve per segment
CVec blockwise_solve(const CholeskyFactor& chol, const CVec& v, int n, int nb) {
    (void)n;
    CVec x = v;
    chol.solve_blocks(x.data(), nb);
    return x;
}

HermMat shifted_block(const HermMat& m, double rho) {
    HermMat s = m;
    s.add_diag(rho * 0.5);
    return s;
}

}  // namespace

AdmmSolver::AdmmSolver(const InnerProblem& p, const AdmmConfig& cfg)
    : p_(p), cfg_(cfg), chol_(shifted_block(p.m_obj, cfg.rho)) {
    if (!(cfg.rho > 0.0)) throw std::invalid_argument("admm: rho must be > 0");
}

void AdmmSolver::ensure_binv() const {
    if (binv_ready_) return;
    binv_b4_ = blockwise_solve(chol_, p_.lin.b4, p_.n, p_.num_beams());
    b4_binv_b4_ =
        kernels::dotc(p_.lin.b4.data(), binv_b4_.data(), binv_b4_.size()).real();
    binv_ready_ = true;
}

double AdmmSolver::kappa_closed_form(const CVec& x0) const {
    ensure_binv();
    return p_.lin.violation(x0) / (2.0 * b4_binv_b4_);
}

CVec AdmmSolver::update_f(const CVec& w, const CVec& tau) const {
    // b3bar = b3 - tau/2 + (rho/2) w
    CVec x0 = p_.b3;
    kernels::axpy(cplx(-0.5), tau.data(), x0.data(), x0.size());
    kernels::axpy(cplx(cfg_.rho * 0.5), w.data(), x0.data(), x0.size());
    chol_.solve_blocks(x0.data(), p_.num_beams());
    if (p_.lin.violation(x0) <= 0.0) return x0;
    ensure_binv();
    if (!(b4_binv_b4_ > 0.0)) {
        throw std::runtime_error(
            "admm: linearized EH constraint unreachable (b4^H B9bar^-1 b4 = 0)");
    }
    const double kappa = kappa_closed_form(x0);
    kernels::axpy(cplx(kappa), binv_b4_.data(), x0.data(), x0.size());
    return x0;
}

CVec project_per_antenna(const CVec& v, int n, int num_beams, double p_t) {
    CVec w = v;
    for (int ant = 0; ant < n; ++ant) {
        double norm_sq = 0.0;
        for (int j = 0; j < num_beams; ++j)
            norm_sq += std::norm(w[static_cast<std::size_t>(j) * n + ant]);
        if (norm_sq > p_t) {
            const double s = std::sqrt(p_t / norm_sq);
            for (int j = 0; j < num_beams; ++j)
                w[static_cast<std::size_t>(j) * n + ant] *= s;
        }
    }
    return w;
}

CVec AdmmSolver::update_w(const CVec& f_ie, const CVec& tau) const {
    // b6 = (2/rho) b5 with b5 = (tau + rho f_ie)/2
    CVec b6 = f_ie;
    kernels::axpy(cplx(1.0 / cfg_.rho), tau.data(), b6.data(), b6.size());
    return project_per_antenna(b6, p_.n, p_.num_beams(), p_.p_t);
}

CVec AdmmSolver::update_dual(const CVec& tau, const CVec& f_ie, const CVec& w) const {
    CVec t = tau;
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += cfg_.rho * (f_ie[i] - w[i]);
    return t;
}

AdmmState AdmmSolver::solve(const AdmmState* warm) const {
    const std::size_t dim = static_cast<std::size_t>(p_.dim());
    AdmmState st;
    st.rho = cfg_.rho;
    if (warm && warm->f_ie.size() == dim) {
        st.f_ie = warm->f_ie;
        st.w = warm->w;
        st.tau = warm->tau;
    } else {
        st.f_ie.assign(dim, cplx(0.0));
        st.w.assign(dim, cplx(0.0));
        st.tau.assign(dim, cplx(0.0));
    }
    st.trace.reserve(cfg_.max_iter);
    for (int it = 1; it <= cfg_.max_iter; ++it) {
        CVec f_new = update_f(st.w, st.tau);
        double step_sq = 0.0;
        for (std::size_t i = 0; i < dim; ++i) step_sq += std::norm(f_new[i] - st.f_ie[i]);
        st.f_ie = std::move(f_new);
        st.w = update_w(st.f_ie, st.tau);
        st.tau = update_dual(st.tau, st.f_ie, st.w);
        double primal_sq = 0.0;
        for (std::size_t i = 0; i < dim; ++i) primal_sq += std::norm(st.f_ie[i] - st.w[i]);
        st.iter = it;
        st.trace.push_back({it, step_sq, primal_sq,
                            cfg_.trace_objective ? p_.objective(st.f_ie)
                                                 : std::numeric_limits<double>::quiet_NaN()});
        if (primal_sq <= cfg_.primal_tol && step_sq <= cfg_.step_tol) {
            st.converged = true;
            break;
        }
    }
    return st;
}

double augmented_lagrangian(const InnerProblem& p, double rho, const CVec& f,
                            const CVec& w, const CVec& tau) {
    double v = p.objective(f);
    cplx inner(0.0);
    double dist_sq = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const cplx d = f[i] - w[i];
        inner += std::conj(tau[i]) * d;
        dist_sq += std::norm(d);
    }
    return v + inner.real() + 0.5 * rho * dist_sq;
}

std::pair<Beamformer, AdmmState> solve_inner(const InnerProblem& p,
                                             const AdmmConfig& cfg,
                                             const AdmmState* warm) {
    AdmmSolver solver(p, cfg);
    AdmmState st = solver.solve(warm);
    return {Beamformer::unstack(st.w, p.n, p.num_id, p.num_eh), st};
}

}  // namespace tris
