// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "matris/codebook.hpp"
#include "matris/geometry.hpp"
#include "matris/snr.hpp"

namespace matris {

/// Complete scenario. Lengths tied to the carrier (element spacing, region
/// side) are stored in wavelengths; positions are in metres.
struct SceneConfig
{
    double carrier_frequency_hz = 20e9;
    double speed_of_light = kSpeedOfLight;

    std::size_t n_x = 16;
    std::size_t n_y = 16;
    double spacing_over_lambda = 0.5;

    Vec3 region_center{0.0, 0.0, -1.0};
    double side_length_over_lambda = 4.0;
    std::size_t samples_per_axis = 21;
    RegionOrientation orientation = RegionOrientation::Axial;

    UserLocation user;
    RadioBudget budget;
    PhaseCodebook codebook = PhaseCodebook::discrete(2);

    RfConstants rf() const { return RfConstants(carrier_frequency_hz, speed_of_light); }
    TrisGeometry tris() const { return build_tris(n_x, n_y, spacing_over_lambda * rf().wavelength()); }
    MaRegion region() const;

    /// Throws InvalidArgument if any derived object would be invalid.
    void validate() const;

    friend bool operator==(const SceneConfig&, const SceneConfig&) = default;
};

} // namespace matris
