// SPDX-License-Identifier: Apache-2.0
#include "matris/geometry.hpp"

#include <cmath>
#include <string>

#include "matris/errors.hpp"

namespace matris {

RfConstants::RfConstants(double carrier_frequency_hz, double speed_of_light)
    : frequency_(carrier_frequency_hz), c_(speed_of_light)
{
    if (!(std::isfinite(frequency_) && frequency_ > 0.0))
        throw InvalidArgument("carrier frequency must be positive and finite");
    if (!(std::isfinite(c_) && c_ > 0.0))
        throw InvalidArgument("speed of light must be positive and finite");
}

TrisGeometry build_tris(std::size_t n_x, std::size_t n_y, double spacing)
{
    if (n_x == 0 || n_y == 0)
        throw InvalidArgument("TRIS dimensions must be at least 1x1");
    if (!(std::isfinite(spacing) && spacing > 0.0))
        throw InvalidArgument("TRIS element spacing must be positive");

    TrisGeometry geom;
    geom.n_x = n_x;
    geom.n_y = n_y;
    geom.spacing = spacing;
    geom.element_positions.reserve(n_x * n_y);

    const double half_x = 0.5 * static_cast<double>(n_x - 1);
    const double half_y = 0.5 * static_cast<double>(n_y - 1);
    for (std::size_t i = 0; i < n_x; ++i)
    {
        const double x = (static_cast<double>(i) - half_x) * spacing;
        for (std::size_t j = 0; j < n_y; ++j)
        {
            const double y = (static_cast<double>(j) - half_y) * spacing;
            geom.element_positions.push_back({x, y, 0.0});
        }
    }
    return geom;
}

double rayleigh_distance(const TrisGeometry& geom, const RfConstants& rf)
{
    const double d = geom.aperture();
    return 2.0 * d * d / rf.wavelength();
}

void MaRegion::validate() const
{
    if (!(std::isfinite(center.x) && std::isfinite(center.y) && std::isfinite(center.z)))
        throw InvalidArgument("MA region center must be finite");
    if (!(center.z < 0.0))
        throw InvalidArgument("MA region center must lie behind the TRIS (z < 0)");
    if (!(std::isfinite(side_length) && side_length >= 0.0))
        throw InvalidArgument("MA region side length must be >= 0");
    if (samples_per_axis < 1)
        throw InvalidArgument("MA region needs at least one sample per axis");
    if (orientation == RegionOrientation::Axial && center.z + 0.5 * side_length > 0.0)
        throw InvalidArgument("axial MA region crosses the TRIS plane (center.z + a/2 > 0)");
}

std::vector<Vec3> enumerate_ma_candidates(const MaRegion& region)
{
    region.validate();
    const std::size_t n = region.samples_per_axis;
    if (n == 1 || region.side_length == 0.0)
        return {region.center};

    const double step = region.side_length / static_cast<double>(n - 1);
    const double half = 0.5 * static_cast<double>(n - 1);
    std::vector<Vec3> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const double u = (static_cast<double>(i) - half) * step;
        for (std::size_t j = 0; j < n; ++j)
        {
            const double v = (static_cast<double>(j) - half) * step;
            if (region.orientation == RegionOrientation::Parallel)
                out.push_back({region.center.x + u, region.center.y + v, region.center.z});
            else
                out.push_back({region.center.x + u, region.center.y, region.center.z + v});
        }
    }
    return out;
}

void UserLocation::validate() const
{
    if (!(std::isfinite(position.x) && std::isfinite(position.y) && std::isfinite(position.z)))
        throw InvalidArgument("user position must be finite");
    if (!(position.z > 0.0))
        throw InvalidArgument("user must be in front of the TRIS (z > 0)");
}

} // namespace matris
