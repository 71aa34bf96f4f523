// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace matris {

/// Cartesian point or displacement in metres.
struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

inline double norm(const Vec3& v)
{
    return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

inline double distance(const Vec3& a, const Vec3& b)
{
    return norm(a - b);
}

} // namespace matris
