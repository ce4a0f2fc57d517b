// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#include "tris/model.hpp"

#include <cmath>
#include <stdexcept>

namespace tris {

Beamformer Beamformer::zero(int n, int num_id, int num_eh) {
    Beamformer bf;
    bf.n = n;
    bf.f_id.assign(num_id, CVec(static_cast<std::size_t>(n), cplx(0.0)));
    bf.f_eh.assign(num_eh, CVec(static_cast<std::size_t>(n), cplx(0.0)));
    return bf;
}

CVec Beamformer::stacked() const {
    CVec f;
    f.reserve(static_cast<std::size_t>(n) * num_beams());
    for (const auto& b : f_id) f.insert(f.end(), b.begin(), b.end());
    for (const auto& b : f_eh) f.insert(f.end(), b.begin(), b.end());
    return f;
}

Beamformer Beamformer::unstack(const CVec& f_ie, int n, int num_id, int num_eh) {
    if (f_ie.size() != static_cast<std::size_t>(n) * (num_id + num_eh))
        throw std::invalid_argument("unstack: length mismatch");
    Beamformer bf = zero(n, num_id, num_eh);
    auto it = f_ie.begin();
    for (auto& b : bf.f_id) { std::copy(it, it + n, b.begin()); it += n; }
    for (auto& b : bf.f_eh) { std::copy(it, it + n, b.begin()); it += n; }
    return bf;
}

void SystemBudgets::validate() const {
    if (!(p_t > 0.0)) throw std::invalid_argument("budgets: p_t must be > 0");
    if (q_t < 0.0) throw std::invalid_argument("budgets: q_t must be >= 0");
    if (!(zeta > 0.0) || zeta > 1.0) throw std::invalid_argument("budgets: zeta must be in (0, 1]");
    for (double s : sigma2_id)
        if (!(s > 0.0)) throw std::invalid_argument("budgets: sigma2 must be > 0");
    if (weights.size() != sigma2_id.size())
        throw std::invalid_argument("budgets: weights/sigma2 length mismatch");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("budgets: weights must be > 0");
}

namespace {

// interference + noise at ID user k (all beams except its own information beam)
double id_denominator(int k, const Beamformer& bf, const ChannelSet& ch,
                      const SystemBudgets& budgets) {
    const CVec& h = ch.h_id[k];
    double denom = budgets.sigma2_id[k];
    for (int i = 0; i < bf.num_id(); ++i) {
        if (i == k) continue;
        denom += std::norm(dotc(h, bf.f_id[i]));
    }
    for (const auto& fe : bf.f_eh) denom += std::norm(dotc(h, fe));
    return denom;
}

}  // namespace

double sinr(int k, const Beamformer& bf, const ChannelSet& ch,
            const SystemBudgets& budgets) {
    const double sig = std::norm(dotc(ch.h_id[k], bf.f_id[k]));
    return sig / id_denominator(k, bf, ch, budgets);
}

double sum_rate(const Beamformer& bf, const ChannelSet& ch,
                const SystemBudgets& budgets, double log_base) {
    double r = 0.0;
    for (int k = 0; k < bf.num_id(); ++k) {
        r += budgets.weights[k] * std::log1p(sinr(k, bf, ch, budgets));
    }
    return r / std::log(log_base);
}

double harvested_energy(int g, const Beamformer& bf, const ChannelSet& ch,
                        const SystemBudgets& budgets) {
    const CVec& h = ch.h_eh[g];
    double q = 0.0;
    for (const auto& fe : bf.f_eh) q += std::norm(dotc(h, fe));
    for (const auto& fi : bf.f_id) q += std::norm(dotc(h, fi));
    return budgets.zeta * q;
}

double total_harvested(const Beamformer& bf, const ChannelSet& ch,
                       const SystemBudgets& budgets) {
    double q = 0.0;
    for (int g = 0; g < ch.num_eh(); ++g) q += harvested_energy(g, bf, ch, budgets);
    return q;
}

double per_antenna_power(int n, const Beamformer& bf) {
    double p = 0.0;
    for (const auto& b : bf.f_id) p += std::norm(b[n]);
    for (const auto& b : bf.f_eh) p += std::norm(b[n]);
    return p;
}

FeasibilityReport check_feasibility(const Beamformer& bf, const ChannelSet& ch,
                                    const SystemBudgets& budgets, double tol) {
    FeasibilityReport rep;
    for (int n = 0; n < bf.n; ++n) {
        const double v = (per_antenna_power(n, bf) - budgets.p_t) / budgets.p_t;
        rep.max_power_violation = std::max(rep.max_power_violation, v);
    }
    rep.max_power_violation = std::max(rep.max_power_violation, 0.0);
    if (budgets.q_t > 0.0) {
        const double q = total_harvested(bf, ch, budgets);
        rep.eh_shortfall = std::max(0.0, (budgets.q_t - q) / budgets.q_t);
    }
    rep.feasible = rep.max_power_violation <= tol && rep.eh_shortfall <= tol;
    return rep;
}

}  // namespace tris
