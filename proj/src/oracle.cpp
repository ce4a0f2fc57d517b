// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tris {

double KktReport::max_residual() const {
    return std::max({stationarity_residual, primal_violation,
                     complementarity_residual});
}

namespace {

HermMat shifted(const HermMat& d, const HermMat& dbar, double s) {
    HermMat m = d;
    const int n = m.dim();
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m(i, j) += s * dbar(i, j);
    return m;
}

double constraint_value(const CVec& x, const HermMat& dbar, const CVec& db,
                        double db0) {
    return dbar.quad_form(x) - 2.0 * dotc(db, x).real() + db0;
}

}  // namespace

std::pair<CVec, KktReport> solve_qcqp_1c(const HermMat& D, const CVec& d,
                                         double d0, const HermMat& Dbar,
                                         const CVec& dbar, double dbar0) {
    (void)d0;
    const double scale_c =
        std::abs(dbar0) + 2.0 * std::sqrt(norm2sq(dbar)) *
                              (std::sqrt(norm2sq(d)) + 1.0) + 1.0;

    auto make_report = [&](const CVec& x, double nu) {
        KktReport rep;
        rep.multiplier = nu;
        // stationarity: D x - d + nu (Dbar x - dbar)
        CVec r = D.mul(x);
        const double scale_s = std::sqrt(norm2sq(d)) + std::sqrt(norm2sq(r)) + 1.0;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= d[i];
        if (nu != 0.0) {
            CVec rb = Dbar.mul(x);
            for (std::size_t i = 0; i < r.size(); ++i) r[i] += nu * (rb[i] - dbar[i]);
        }
        rep.stationarity_residual = std::sqrt(norm2sq(r)) / scale_s;
        const double g = constraint_value(x, Dbar, dbar, dbar0);
        rep.primal_violation = std::max(0.0, g) / scale_c;
        rep.complementarity_residual = std::abs(nu * g) / ((nu + 1.0) * scale_c);
        return rep;
    };

    // constraint slack: unconstrained candidate
    CVec x0 = herm_solve(D, d);
    if (constraint_value(x0, Dbar, dbar, dbar0) <= 0.0) {
        return {x0, make_report(x0, 0.0)};
    }

    // constraint binding: unique positive root of the monotone constraint equation
    auto x_of = [&](double s) {
        CVec rhs = d;
        axpy(cplx(s), dbar, rhs);
        return herm_solve(shifted(D, Dbar, s), rhs);
    };
    auto g_of = [&](const CVec& x) { return constraint_value(x, Dbar, dbar, dbar0); };

    double lo = 0.0, g_lo = g_of(x0);
    double hi = 1.0;
    CVec x_hi = x_of(hi);
    double g_hi = g_of(x_hi);
    int doubling = 0;
    while (g_hi > 0.0) {
        lo = hi;
        g_lo = g_hi;
        hi *= 2.0;
        x_hi = x_of(hi);
        g_hi = g_of(x_hi);
        if (++doubling > 200)
            throw std::runtime_error("solve_qcqp_1c: no positive root (infeasible constraint)");
    }

    double s = 0.5 * (lo + hi);
    CVec x = x_of(s);
    for (int it = 0; it < 200; ++it) {
        const double g = g_of(x);
        if (std::abs(g) <= 1e-12 * scale_c) break;
        if (g > 0.0) lo = s; else hi = s;
        // Newton step: g'(s) = -2 r^H (D + s Dbar)^{-1} r, r = Dbar x - dbar
        CVec r = Dbar.mul(x);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= dbar[i];
        CVec minv_r = herm_solve(shifted(D, Dbar, s), r);
        const double gp = -2.0 * dotc(r, minv_r).real();
        double s_new = (gp < 0.0) ? s - g / gp : -1.0;
        if (!(s_new > lo && s_new < hi)) s_new = 0.5 * (lo + hi);  // bisection fallback
        s = s_new;
        x = x_of(s);
    }
    (void)g_lo;
    return {x, make_report(x, s)};
}

CVec project_onto_constraints(const CVec& v, int n, int num_beams, double p_t,
                              const LinearizedEhConstraint& lin, double tol,
                              int max_iter) {
    const double b4_sq = norm2sq(lin.b4);
    const double scale = std::sqrt(norm2sq(v)) + std::sqrt(p_t * n) + 1.0;
    if (b4_sq == 0.0) {
        if (-lin.c3 > tol * scale)
            throw std::runtime_error("project: EH halfspace empty (b4 = 0, c3 < 0)");
        return project_per_antenna(v, n, num_beams, p_t);
    }

    auto project_halfspace = [&](const CVec& f) {
        const double viol = lin.violation(f);
        CVec out = f;
        if (viol > 0.0) axpy(cplx(viol / (2.0 * b4_sq)), lin.b4, out);
        return out;
    };

    // Dykstra over the ball product and the halfspace
    CVec x = v;
    CVec p(v.size(), cplx(0.0)), q(v.size(), cplx(0.0));
    for (int it = 0; it < max_iter; ++it) {
        CVec y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += p[i];
        CVec yb = project_per_antenna(y, n, num_beams, p_t);
        for (std::size_t i = 0; i < y.size(); ++i) p[i] = y[i] - yb[i];

        CVec z = yb;
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += q[i];
        CVec zh = project_halfspace(z);
        for (std::size_t i = 0; i < z.size(); ++i) q[i] = z[i] - zh[i];

        double move = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) move += std::norm(zh[i] - x[i]);
        x = std::move(zh);

        const double hs_viol = std::max(0.0, lin.violation(x));
        double ball_viol = 0.0;
        for (int ant = 0; ant < n; ++ant) {
            double s = 0.0;
            for (int j = 0; j < num_beams; ++j)
                s += std::norm(x[static_cast<std::size_t>(j) * n + ant]);
            ball_viol = std::max(ball_viol, s - p_t);
        }
        if (hs_viol <= tol * scale && ball_viol <= tol * p_t) return x;
        if (move <= 1e-32 * scale * scale) {
            throw std::runtime_error("project: Dykstra stalled; constraint intersection empty");
        }
    }
    throw std::runtime_error("project: Dykstra failed to converge");
}

OracleResult solve_inner_reference(const InnerProblem& p, double grad_tol,
                                int max_iter, const CVec* warm) {
    const std::size_t dim = static_cast<std::size_t>(p.dim());
    const int nb = p.num_beams();

    // Lipschitz constant of the gradient: 2 lambda_max(m_obj) via power iteration
    double lmax = 0.0;
    {
        CVec v(static_cast<std::size_t>(p.n), cplx(1.0));
        for (int it = 0; it < 60; ++it) {
            CVec w = p.m_obj.mul(v);
            const double nrm = std::sqrt(norm2sq(w));
            if (nrm == 0.0) break;
            lmax = nrm / std::sqrt(norm2sq(v));
            scale(1.0 / nrm, w);
            v = std::move(w);
            lmax = p.m_obj.quad_form(v);
        }
    }
    const double L = std::max(2.0 * lmax, 1e-30);
    const double step = 1.0 / L;

    auto grad = [&](const CVec& f) {
        CVec g(dim);
        for (int j = 0; j < nb; ++j) {
            CVec seg(f.begin() + static_cast<std::size_t>(j) * p.n,
                     f.begin() + static_cast<std::size_t>(j + 1) * p.n);
            CVec ms = p.m_obj.mul(seg);
            std::copy(ms.begin(), ms.end(), g.begin() + static_cast<std::size_t>(j) * p.n);
        }
        for (std::size_t i = 0; i < dim; ++i) g[i] = 2.0 * (g[i] - p.b3[i]);
        return g;
    };
    auto quad_dir = [&](const CVec& d) {
        double a = 0.0;
        for (int j = 0; j < nb; ++j) {
            CVec seg(d.begin() + static_cast<std::size_t>(j) * p.n,
                     d.begin() + static_cast<std::size_t>(j + 1) * p.n);
            a += p.m_obj.quad_form(seg);
        }
        return a;
    };

    CVec f = warm && warm->size() == dim ? *warm : CVec(dim, cplx(0.0));
    f = project_onto_constraints(f, p.n, nb, p.p_t, p.lin);

    OracleResult res;
    int it = 0;
    for (; it < max_iter; ++it) {
        const CVec g = grad(f);
        CVec y = f;
        for (std::size_t i = 0; i < dim; ++i) y[i] -= step * g[i];
        CVec z = project_onto_constraints(y, p.n, nb, p.p_t, p.lin);
        CVec d(dim);
        double d_sq = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            d[i] = z[i] - f[i];
            d_sq += std::norm(d[i]);
        }
        if (L * std::sqrt(d_sq) <= grad_tol) break;
        // exact line search on the quadratic along d, clipped to [0, 1]
        const double a = quad_dir(d);
        const double b = dotc(g, d).real();
        double alpha = 1.0;
        if (a > 0.0) alpha = std::clamp(-b / (2.0 * a), 0.0, 1.0);
        for (std::size_t i = 0; i < dim; ++i) f[i] += alpha * d[i];
    }
    res.f = std::move(f);
    res.objective = p.objective(res.f);
    res.iters = it;
    return res;
}

KktReport verify_kkt_f_update(const CVec& x, const HermMat& m_bar_block,
                        const CVec& b3bar, const LinearizedEhConstraint& lin) {
    KktReport rep;
    const int n = m_bar_block.dim();
    const int nb = static_cast<int>(x.size()) / n;
    // r0 = B9bar x - b3bar
    CVec r0(x.size());
    for (int j = 0; j < nb; ++j) {
        CVec seg(x.begin() + static_cast<std::size_t>(j) * n,
                 x.begin() + static_cast<std::size_t>(j + 1) * n);
        CVec ms = m_bar_block.mul(seg);
        std::copy(ms.begin(), ms.end(), r0.begin() + static_cast<std::size_t>(j) * n);
    }
    const double scale_s = std::sqrt(norm2sq(r0)) + std::sqrt(norm2sq(b3bar)) + 1.0;
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] -= b3bar[i];

    const double b4_sq = norm2sq(lin.b4);
    double kappa = 0.0;
    if (b4_sq > 0.0) kappa = std::max(0.0, dotc(lin.b4, r0).real() / b4_sq);
    rep.multiplier = kappa;

    CVec stat = r0;
    if (kappa != 0.0) axpy(cplx(-kappa), lin.b4, stat);
    rep.stationarity_residual = std::sqrt(norm2sq(stat)) / scale_s;

    const double g = lin.violation(x);
    const double scale_c = std::abs(lin.c3) +
                           2.0 * std::sqrt(b4_sq * norm2sq(x)) + 1.0;
    rep.primal_violation = std::max(0.0, g) / scale_c;
    rep.complementarity_residual = std::abs(kappa * g) / ((kappa + 1.0) * scale_c);
    return rep;
}

KktReport verify_kkt_w_update(const CVec& w_n, const CVec& b6n, double p_t) {
    KktReport rep;
    const double b_norm = std::sqrt(norm2sq(b6n));
    const double mu = std::max(0.0, b_norm / std::sqrt(p_t) - 1.0);
    rep.multiplier = mu;
    // stationarity: (1 + mu) w - b6n = 0
    CVec r = w_n;
    scale(1.0 + mu, r);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b6n[i];
    rep.stationarity_residual = std::sqrt(norm2sq(r)) / (b_norm + 1.0);
    const double g = norm2sq(w_n) - p_t;
    rep.primal_violation = std::max(0.0, g) / p_t;
    rep.complementarity_residual = std::abs(mu * g) / ((mu + 1.0) * p_t);
    return rep;
}

}  // namespace tris
