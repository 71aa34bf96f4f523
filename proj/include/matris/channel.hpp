// SPDX-License-Identifier: Apache-2.0
//
// Spherical-wave line-of-sight channel between the MA, each TRIS element and
// the user.
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "matris/geometry.hpp"

namespace matris {

/// Scalar link parameters: transmission loss of the TRIS and the gain and
/// radiation-pattern products of its two faces.
struct LinkGains
{
    double gamma = 1.0;
    double gain_product = 1.0;
    double pattern_product = 1.0;

    void validate() const;

    friend bool operator==(const LinkGains&, const LinkGains&) = default;
};

/// Per-element geometry of one MA placement.
struct LinkState
{
    std::vector<double> d_tx;        // MA -> element, m
    std::vector<double> d_rx;        // element -> user, m
    std::vector<double> ideal_phase; // (2 pi / lambda)(d_tx + d_rx) mod 2 pi

    std::size_t size() const noexcept { return d_tx.size(); }
};

/// ||endpoint - p|| for every p, in input order. Throws SingularGeometry when
/// the endpoint sits on one of the points.
std::vector<double> element_distances(std::span<const Vec3> points, const Vec3& endpoint);

/// sqrt(lambda G F / 4 pi) / d * exp(-j 2 pi d / lambda). Used for both the
/// MA->TRIS and TRIS->user hops.
std::complex<double> channel_coefficient(double distance, const RfConstants& rf, double gain, double pattern);

/// Propagation phase 2 pi d / lambda reduced to [0, 2 pi).
double wrapped_phase(double path_length, const RfConstants& rf);

LinkState build_link_state(const TrisGeometry& geom, const Vec3& ma_position, const UserLocation& user,
                           const RfConstants& rf);

} // namespace matris
