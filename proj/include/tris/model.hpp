// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_MODEL_HPP
#define TRIS_MODEL_HPP

#include <vector>

#include "tris/channel.hpp"
#include "tris/linalg.hpp"

namespace tris {

// Per-user information and energy beams. Stacked views are pure
// reindexings: f_IE = [f_I; f_E] with one length-N segment per beam.
struct Beamformer {
    int n = 0;
    std::vector<CVec> f_id;
    std::vector<CVec> f_eh;

    static Beamformer zero(int n, int num_id, int num_eh);

    int num_id() const { return static_cast<int>(f_id.size()); }
    int num_eh() const { return static_cast<int>(f_eh.size()); }
    int num_beams() const { return num_id() + num_eh(); }

    // beam j: information beams first, then energy beams
    const CVec& beam(int j) const {
        return j < num_id() ? f_id[j] : f_eh[j - num_id()];
    }

    CVec stacked() const;  // f_IE, length N(K+G)
    static Beamformer unstack(const CVec& f_ie, int n, int num_id, int num_eh);
};

struct SystemBudgets {
    double p_t = 0.01;   // watts per antenna
    double q_t = 0.0;    // watts total harvested
    double zeta = 1.0;   // EH efficiency in (0, 1]
    std::vector<double> sigma2_id;  // K noise powers
    std::vector<double> weights;    // K rate weights

    void validate() const;
};

double sinr(int k, const Beamformer& bf, const ChannelSet& ch,
            const SystemBudgets& budgets);

// sum_k weights[k] * log(1 + SINR_k) / log(log_base)
double sum_rate(const Beamformer& bf, const ChannelSet& ch,
                const SystemBudgets& budgets, double log_base = 2.0);

double harvested_energy(int g, const Beamformer& bf, const ChannelSet& ch,
                        const SystemBudgets& budgets);

double total_harvested(const Beamformer& bf, const ChannelSet& ch,
                       const SystemBudgets& budgets);

// sum over all beams of |beam[n]|^2, n zero-based
double per_antenna_power(int n, const Beamformer& bf);

struct FeasibilityReport {
    double max_power_violation = 0.0;  // relative to P_t
    double eh_shortfall = 0.0;         // relative to Q_t
    bool feasible = false;
};

FeasibilityReport check_feasibility(const Beamformer& bf, const ChannelSet& ch,
                                    const SystemBudgets& budgets, double tol);

}  // namespace tris

#endif
