// SPDX-License-Identifier: Apache-2.0
#include "matris/snr.hpp"

#include <cmath>
#include <numbers>

#include "matris/errors.hpp"

namespace matris {

double dbm_to_watt(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double linear_to_db(double value)
{
    return 10.0 * std::log10(value);
}

void RadioBudget::validate() const
{
    if (!(std::isfinite(tx_power_dbm) && std::isfinite(noise_power_dbm) && std::isfinite(prefactor_db_offset)))
        throw InvalidArgument("radio budget values must be finite");
    link_gains.validate();
}

double snr_prefactor(const RadioBudget& budget, const RfConstants& rf)
{
    const double lambda = rf.wavelength();
    const auto& g = budget.link_gains;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return lambda * lambda * g.gamma * g.gamma * dbm_to_watt(budget.tx_power_dbm) * g.gain_product
           * g.pattern_product / (16.0 * pi2 * dbm_to_watt(budget.noise_power_dbm))
           * std::pow(10.0, budget.prefactor_db_offset / 10.0);
}

std::complex<double> coherent_sum(const LinkState& link, const PhaseVector& phases)
{
    if (phases.size() != link.size())
        throw InvalidArgument("phase vector length does not match the TRIS element count");
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < link.size(); ++i)
    {
        const double amplitude = 1.0 / (link.d_tx[i] * link.d_rx[i]);
        sum += std::polar(amplitude, phases.phases[i] - link.ideal_phase[i]);
    }
    return sum;
}

double amplitude_sum(const LinkState& link)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < link.size(); ++i)
        sum += 1.0 / (link.d_tx[i] * link.d_rx[i]);
    return sum;
}

double snr_upper_bound(const LinkState& link, const RadioBudget& budget, const RfConstants& rf)
{
    const double s = amplitude_sum(link);
    return snr_prefactor(budget, rf) * s * s;
}

SnrReport snr_discrete(const LinkState& link, const PhaseVector& phases, const RadioBudget& budget,
                       const RfConstants& rf)
{
    const double prefactor = snr_prefactor(budget, rf);
    const double coherent_power = std::norm(coherent_sum(link, phases));
    const double s = amplitude_sum(link);
    const double bound_power = s * s;

    SnrReport report;
    report.snr_linear = prefactor * coherent_power;
    report.upper_bound_linear = prefactor * bound_power;
    report.relative_snr = coherent_power / bound_power;
    report.snr_db = linear_to_db(report.snr_linear);
    report.upper_bound_db = linear_to_db(report.upper_bound_linear);
    return report;
}

} // namespace matris
