// SPDX-License-Identifier: Apache-2.0
//
// Deterministic received-SNR evaluation. Noise enters only through its
// variance; no realizations are drawn.
#pragma once

#include <complex>

#include "matris/channel.hpp"
#include "matris/codebook.hpp"

namespace matris {

double dbm_to_watt(double dbm);
double linear_to_db(double value);

struct RadioBudget
{
    double tx_power_dbm = 13.6;
    double noise_power_dbm = -120.0;
    LinkGains link_gains;
    /// Extra calibration gain folded into the prefactor, in dB.
    double prefactor_db_offset = 0.0;

    void validate() const;

    friend bool operator==(const RadioBudget&, const RadioBudget&) = default;
};

/// lambda^2 Gamma^2 P G F / (16 pi^2 sigma^2), times the calibration offset.
double snr_prefactor(const RadioBudget& budget, const RfConstants& rf);

struct SnrReport
{
    double snr_linear = 0.0;
    double snr_db = 0.0;
    double upper_bound_linear = 0.0;
    double upper_bound_db = 0.0;
    double relative_snr = 0.0; // |coherent sum|^2 / (sum of amplitudes)^2
};

/// sum_i exp(j(phase_i - ideal_i)) / (d_tx_i d_rx_i), accumulated in
/// ascending element order. ideal_i is the wrapped propagation phase, which is
/// congruent to (2 pi / lambda)(d_tx_i + d_rx_i) modulo 2 pi.
std::complex<double> coherent_sum(const LinkState& link, const PhaseVector& phases);

/// sum_i 1 / (d_tx_i d_rx_i), same order as coherent_sum.
double amplitude_sum(const LinkState& link);

double snr_upper_bound(const LinkState& link, const RadioBudget& budget, const RfConstants& rf);

SnrReport snr_discrete(const LinkState& link, const PhaseVector& phases, const RadioBudget& budget,
                       const RfConstants& rf);

} // namespace matris
