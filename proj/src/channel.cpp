// SPDX-License-Identifier: Apache-2.0
#include "matris/channel.hpp"

#include <cmath>
#include <numbers>

#include "matris/errors.hpp"

namespace matris {

void LinkGains::validate() const
{
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw InvalidArgument("transmission loss gamma must lie in [0, 1]");
    if (!(std::isfinite(gain_product) && gain_product > 0.0))
        throw InvalidArgument("gain product must be positive");
    if (!(std::isfinite(pattern_product) && pattern_product > 0.0))
        throw InvalidArgument("pattern product must be positive");
}

std::vector<double> element_distances(std::span<const Vec3> points, const Vec3& endpoint)
{
    std::vector<double> out;
    out.reserve(points.size());
    for (const Vec3& p : points)
    {
        const double d = distance(endpoint, p);
        if (!(d > 0.0))
            throw SingularGeometry("endpoint coincides with a TRIS element");
        out.push_back(d);
    }
    return out;
}

double wrapped_phase(double path_length, const RfConstants& rf)
{
    // Reduce in cycles first; multiplying the fractional part keeps the
    // result accurate even when the path spans thousands of wavelengths.
    const double cycles = path_length / rf.wavelength();
    double phase = kTwoPi * (cycles - std::floor(cycles));
    if (phase >= kTwoPi)
        phase = 0.0;
    return phase;
}

std::complex<double> channel_coefficient(double distance, const RfConstants& rf, double gain, double pattern)
{
    if (!(distance > 0.0))
        throw SingularGeometry("channel distance must be positive");
    const double lambda = rf.wavelength();
    const double amplitude = std::sqrt(lambda * gain * pattern / (4.0 * std::numbers::pi)) / distance;
    return std::polar(amplitude, -wrapped_phase(distance, rf));
}

LinkState build_link_state(const TrisGeometry& geom, const Vec3& ma_position, const UserLocation& user,
                           const RfConstants& rf)
{
    if (ma_position.z > 0.0)
        throw InvalidArgument("MA must be behind the TRIS (z <= 0)");
    user.validate();

    LinkState link;
    link.d_tx = element_distances(geom.element_positions, ma_position);
    link.d_rx = element_distances(geom.element_positions, user.position);
    link.ideal_phase.resize(link.d_tx.size());
    for (std::size_t i = 0; i < link.d_tx.size(); ++i)
        link.ideal_phase[i] = wrapped_phase(link.d_tx[i] + link.d_rx[i], rf);
    return link;
}

} // namespace matris
