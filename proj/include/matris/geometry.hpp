// SPDX-License-Identifier: Apache-2.0
//
// Spatial layout of the base station: TRIS element grid on the z = 0 plane,
// the movable-antenna region behind it (z < 0) and the user in front (z > 0).
#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "matris/vec3.hpp"

namespace matris {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s, exact
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Carrier and propagation constants. Wavelength is derived, never stored
/// independently of the frequency.
class RfConstants
{
  public:
    explicit RfConstants(double carrier_frequency_hz, double speed_of_light = kSpeedOfLight);

    double carrier_frequency() const noexcept { return frequency_; }
    double speed_of_light() const noexcept { return c_; }
    double wavelength() const noexcept { return c_ / frequency_; }
    double wavenumber() const noexcept { return kTwoPi / wavelength(); }

  private:
    double frequency_;
    double c_;
};

/// Centered N_x x N_y element grid. Element (i, j) is stored at flat index
/// i * n_y + j (row-major, x index outermost).
struct TrisGeometry
{
    std::size_t n_x = 0;
    std::size_t n_y = 0;
    double spacing = 0.0;
    std::vector<Vec3> element_positions;

    std::size_t size() const noexcept { return element_positions.size(); }

    /// Largest array dimension, taken along x.
    double aperture() const noexcept { return static_cast<double>(n_x) * spacing; }

    std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * n_y + j; }
};

TrisGeometry build_tris(std::size_t n_x, std::size_t n_y, double spacing);

/// Near-field / far-field boundary 2 D^2 / lambda.
double rayleigh_distance(const TrisGeometry& geom, const RfConstants& rf);

/// Which plane the a x a movement square lies in.
///
/// `Parallel` keeps z fixed (square faces the TRIS). `Axial` spans x and z,
/// so the MA can also move toward or away from the surface.
enum class RegionOrientation
{
    Parallel,
    Axial,
};

struct MaRegion
{
    Vec3 center{0.0, 0.0, -1.0};
    double side_length = 0.0;
    std::size_t samples_per_axis = 1;
    RegionOrientation orientation = RegionOrientation::Axial;

    /// Throws InvalidArgument unless side_length >= 0, samples >= 1 and the
    /// whole square stays on the z <= 0 side with its center strictly behind
    /// the TRIS plane.
    void validate() const;
};

/// Uniform inclusive grid over the region, row-major with the first in-plane
/// axis (x) outermost. A single sample or a zero side yields just the center.
std::vector<Vec3> enumerate_ma_candidates(const MaRegion& region);

struct UserLocation
{
    Vec3 position{0.0, 0.0, 12.5};

    void validate() const;

    friend bool operator==(const UserLocation&, const UserLocation&) = default;
};

} // namespace matris
