// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/wmmse.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tris {

namespace {

// sum over all beams of |h^H f_b|^2 plus noise
double total_receive_power(const CVec& h, const Beamformer& bf, double sigma2) {
    double p = sigma2;
    for (const auto& fi : bf.f_id) p += std::norm(dotc(h, fi));
    for (const auto& fe : bf.f_eh) p += std::norm(dotc(h, fe));
    return p;
}

}  // namespace

std::vector<cplx> update_beta(const Beamformer& bf, const ChannelSet& ch,
                              const SystemBudgets& budgets) {
    std::vector<cplx> beta(ch.num_id());
    for (int k = 0; k < ch.num_id(); ++k) {
        const cplx sig = dotc(ch.h_id[k], bf.f_id[k]);
        beta[k] = sig / total_receive_power(ch.h_id[k], bf, budgets.sigma2_id[k]);
    }
    return beta;
}

std::vector<double> update_omega(const Beamformer& bf, const ChannelSet& ch,
                                 const SystemBudgets& budgets) {
    std::vector<double> omega(ch.num_id());
    for (int k = 0; k < ch.num_id(); ++k) omega[k] = 1.0 + sinr(k, bf, ch, budgets);
    return omega;
}

double surrogate_value(const Beamformer& bf, const std::vector<cplx>& beta,
                       const std::vector<double>& omega, const ChannelSet& ch,
                       const SystemBudgets& budgets, double log_base) {
    double v = 0.0;
    for (int k = 0; k < ch.num_id(); ++k) {
        const cplx sig = dotc(ch.h_id[k], bf.f_id[k]);
        const double rx = total_receive_power(ch.h_id[k], bf, budgets.sigma2_id[k]);
        const double mse = 1.0 - 2.0 * (std::conj(beta[k]) * sig).real() +
                           std::norm(beta[k]) * rx;
        v += budgets.weights[k] * (std::log(omega[k]) - omega[k] * mse + 1.0);
    }
    return v / std::log(log_base);
}

SurrogateState assemble_quadratics(const std::vector<cplx>& beta,
                                   const std::vector<double>& omega,
                                   const ChannelSet& ch,
                                   const SystemBudgets& budgets) {
    SurrogateState st;
    st.beta = beta;
    st.omega = omega;
    st.n = ch.n;
    st.num_id = ch.num_id();
    st.num_eh = ch.num_eh();

    st.m_obj = HermMat(ch.n);
    st.c2 = 0.0;
    st.b3.assign(static_cast<std::size_t>(ch.n) * (st.num_id + st.num_eh), cplx(0.0));
    for (int k = 0; k < st.num_id; ++k) {
        const double wk = budgets.weights[k];
        st.m_obj.rank1_update(wk * omega[k] * std::norm(beta[k]), ch.h_id[k]);
        const cplx coeff = wk * omega[k] * beta[k];
        kernels::axpy(coeff, ch.h_id[k].data(),
                      st.b3.data() + static_cast<std::size_t>(k) * ch.n, ch.n);
        st.c2 += wk * (std::log(omega[k]) - omega[k] -
                       omega[k] * std::norm(beta[k]) * budgets.sigma2_id[k] + 1.0);
    }

    st.m_eh = HermMat(ch.n);
    for (int g = 0; g < st.num_eh; ++g) st.m_eh.rank1_update(1.0, ch.h_eh[g]);
    return st;
}

double surrogate_quadratic(const SurrogateState& st, const CVec& f_ie) {
    double quad = 0.0;
    const int nb = st.num_id + st.num_eh;
    for (int j = 0; j < nb; ++j) {
        CVec seg(f_ie.begin() + static_cast<std::size_t>(j) * st.n,
                 f_ie.begin() + static_cast<std::size_t>(j + 1) * st.n);
        quad += st.m_obj.quad_form(seg);
    }
    const double lin = 2.0 * kernels::dotc(st.b3.data(), f_ie.data(), st.b3.size()).real();
    return -quad + lin + st.c2;
}

Beamformer init_matched_filter(const ChannelSet& ch, const SystemBudgets& budgets,
                               double margin) {
    budgets.validate();
    Beamformer bf;
    bf.n = ch.n;
    bf.f_id = ch.h_id;
    bf.f_eh = ch.h_eh;

    // common scale putting the busiest antenna at margin * P_t
    double peak = 0.0;
    for (int n = 0; n < ch.n; ++n) peak = std::max(peak, per_antenna_power(n, bf));
    if (peak <= 0.0) {
        if (budgets.q_t > 0.0)
            throw std::runtime_error("init_matched_filter: zero channels with Q_t > 0");
        return bf;
    }
    const double s = std::sqrt(margin * budgets.p_t / peak);
    for (auto& b : bf.f_id) scale(s, b);
    for (auto& b : bf.f_eh) scale(s, b);

    if (budgets.q_t <= 0.0) return bf;

    // split harvest into the ID and energy contributions
    double e_id = 0.0, e_eh = 0.0;
    for (int g = 0; g < ch.num_eh(); ++g) {
        for (const auto& fi : bf.f_id) e_id += std::norm(dotc(ch.h_eh[g], fi));
        for (const auto& fe : bf.f_eh) e_eh += std::norm(dotc(ch.h_eh[g], fe));
    }
    const double target = budgets.q_t / budgets.zeta;
    if (e_id + e_eh >= target) return bf;

    if (e_eh <= 0.0)
        throw std::runtime_error("init_matched_filter: Q_t unreachable (no energy beams)");

    // boost energy beams up to the per-antenna limit
    double gamma2_max = std::numeric_limits<double>::infinity();
    for (int n = 0; n < ch.n; ++n) {
        double p_i = 0.0, p_e = 0.0;
        for (const auto& b : bf.f_id) p_i += std::norm(b[n]);
        for (const auto& b : bf.f_eh) p_e += std::norm(b[n]);
        if (p_e > 0.0) gamma2_max = std::min(gamma2_max, (budgets.p_t - p_i) / p_e);
    }
    const double gamma2_needed = (target - e_id) / e_eh;
    if (gamma2_needed > gamma2_max * (1.0 + 1e-12))
        throw std::runtime_error("init_matched_filter: Q_t unreachable at per-antenna limit");
    const double gamma = std::sqrt(std::min(gamma2_needed, gamma2_max));
    for (auto& b : bf.f_eh) scale(gamma, b);
    return bf;
}

}  // namespace tris
