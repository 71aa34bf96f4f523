// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

#include "matris/errors.hpp"
#include "matris/optimizer.hpp"

using namespace matris;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace {
SceneConfig small_scene()
{
    SceneConfig s;
    s.n_x = 4;
    s.n_y = 4;
    s.region_center = {0.0, 0.0, -0.3};
    s.side_length_over_lambda = 2.0;
    s.samples_per_axis = 3;
    s.user.position = {0.0, 0.0, 2.0};
    return s;
}

// Relative SNR at one MA position, computed from scratch in 50 digits with a
// 1-bit nearest-level rule.
mp oracle_relative_1bit(const SceneConfig& s, mp mx, mp my, mp mz)
{
    const mp lam = mp(s.speed_of_light) / mp(s.carrier_frequency_hz);
    const mp d = lam * mp(s.spacing_over_lambda);
    const mp pi = boost::math::constants::pi<mp>();
    const mp ux(s.user.position.x), uy(s.user.position.y), uz(s.user.position.z);
    mp amp = 0, re = 0, im = 0;
    for (std::size_t i = 0; i < s.n_x; ++i)
    {
        for (std::size_t j = 0; j < s.n_y; ++j)
        {
            const mp x = (mp(i) - mp(s.n_x - 1) / 2) * d;
            const mp y = (mp(j) - mp(s.n_y - 1) / 2) * d;
            const mp dt = sqrt((x - mx) * (x - mx) + (y - my) * (y - my) + mz * mz);
            const mp dr = sqrt((x - ux) * (x - ux) + (y - uy) * (y - uy) + uz * uz);
            const mp a = 1 / (dt * dr);
            const mp ideal = fmod(2 * pi * (dt + dr) / lam, 2 * pi);
            const mp applied = (ideal > pi / 2 && ideal < 3 * pi / 2) ? pi : mp(0);
            amp += a;
            re += a * cos(applied - ideal);
            im += a * sin(applied - ideal);
        }
    }
    return (re * re + im * im) / (amp * amp);
}
} // namespace

TEST_CASE("single candidate returns the region center")
{
    SceneConfig s;
    s.samples_per_axis = 1;
    const auto r = optimize_ma(s, build_codebook(2));
    CHECK(r.snr_map.size() == 1);
    CHECK(r.best_position == s.region_center);
    CHECK(r.best_report.snr_db == r.baseline_report.snr_db);
    CHECK(optimized_vs_fixed_gain(s, build_codebook(2)) == 0.0);

    s.samples_per_axis = 5;
    s.side_length_over_lambda = 0.0;
    CHECK(optimize_ma(s, build_codebook(1)).snr_map.size() == 1);
}

TEST_CASE("search is exhaustive and ordered")
{
    SceneConfig s = small_scene();
    s.samples_per_axis = 7;
    const auto r = optimize_ma(s, build_codebook(2));
    REQUIRE(r.snr_map.size() == 49);
    CHECK(r.excluded.empty());
    const auto grid = enumerate_ma_candidates(s.region());
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(r.snr_map[i].position == grid[i]);
    for (const auto& e : r.snr_map)
        CHECK(e.report.snr_linear <= r.best_report.snr_linear);
    CHECK(r.snr_map[r.best_index].position == r.best_position);
    CHECK(r.best_report.snr_linear >= r.baseline_report.snr_linear);
}

TEST_CASE("continuous argmax is the amplitude-sum argmax")
{
    SceneConfig s = small_scene();
    s.samples_per_axis = 9;
    const auto r = optimize_ma(s, PhaseCodebook::continuous());
    std::size_t best = 0;
    double best_amp = -1.0;
    const auto grid = enumerate_ma_candidates(s.region());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const double a = amplitude_sum(build_link_state(s.tris(), grid[i], s.user, s.rf()));
        if (a > best_amp)
        {
            best_amp = a;
            best = i;
        }
    }
    CHECK(r.best_index == best);
    for (const auto& e : r.snr_map)
        CHECK_THAT(e.report.relative_snr, WithinRel(1.0, 1e-12));
}

TEST_CASE("1-bit search on a 4x4 surface matches a high-precision brute force")
{
    const SceneConfig s = small_scene();
    const auto r = optimize_ma(s, build_codebook(1));
    const auto grid = enumerate_ma_candidates(s.region());
    REQUIRE(r.snr_map.size() == grid.size());

    // Independent grid: step a/2 on each axis of the axial square.
    const mp lam = mp(s.speed_of_light) / mp(s.carrier_frequency_hz);
    const mp a = lam * mp(s.side_length_over_lambda);
    std::size_t k = 0;
    double best_abs = -1.0;
    std::size_t best_k = 0;
    for (int i = -1; i <= 1; ++i)
    {
        for (int j = -1; j <= 1; ++j, ++k)
        {
            const mp mx = mp(i) * a / 2;
            const mp mz = mp(s.region_center.z) + mp(j) * a / 2;
            CHECK_THAT(grid[k].x, WithinAbs(static_cast<double>(mx), 1e-15));
            CHECK_THAT(grid[k].z, WithinAbs(static_cast<double>(mz), 1e-15));
            const double rel = static_cast<double>(oracle_relative_1bit(s, mx, mp(0), mz));
            CHECK_THAT(r.snr_map[k].report.relative_snr, WithinRel(rel, 1e-10));
            const double absolute = rel * r.snr_map[k].report.upper_bound_linear;
            if (absolute > best_abs)
            {
                best_abs = absolute;
                best_k = k;
            }
        }
    }
    CHECK(r.best_index == best_k);
    CHECK_THAT(r.best_report.snr_linear, WithinRel(best_abs, 1e-10));
}

TEST_CASE("results do not depend on the thread count")
{
    SceneConfig s;
    s.samples_per_axis = 11;
    for (const auto& cb : {PhaseCodebook::continuous(), build_codebook(1), build_codebook(2)})
    {
        const auto one = optimize_ma(s, cb, 1);
        for (unsigned t : {2u, 3u, 8u})
        {
            const auto many = optimize_ma(s, cb, t);
            CHECK(many.best_index == one.best_index);
            CHECK(many.best_report.snr_linear == one.best_report.snr_linear);
            REQUIRE(many.snr_map.size() == one.snr_map.size());
            for (std::size_t i = 0; i < one.snr_map.size(); ++i)
                CHECK(many.snr_map[i].report.snr_linear == one.snr_map[i].report.snr_linear);
        }
    }
}

TEST_CASE("dominance")
{
    for (std::size_t n : {4u, 10u, 16u})
    {
        SceneConfig s;
        s.n_x = s.n_y = n;
        s.samples_per_axis = 9;
        const auto cont = optimize_ma(s, PhaseCodebook::continuous());
        for (unsigned b = 1; b <= 4; ++b)
        {
            const auto q = optimize_ma(s, build_codebook(b));
            CHECK(q.best_report.snr_linear <= cont.best_report.snr_linear * (1.0 + 1e-12));
            CHECK(q.best_report.snr_linear >= q.baseline_report.snr_linear);
            CHECK(optimized_vs_fixed_gain(s, build_codebook(b)) >= 0.0);
        }
    }
}

TEST_CASE("candidates on a TRIS element are excluded")
{
    SceneConfig s;
    s.n_x = s.n_y = 1;
    const std::vector<Vec3> candidates{{0.0, 0.0, 0.0}, {0.0, 0.0, -0.5}, {0.0, 0.0, 0.0}};
    const auto r = optimize_candidates(s, candidates, {0.0, 0.0, -0.5}, build_codebook(2));
    CHECK(r.snr_map.size() == 1);
    CHECK(r.excluded.size() == 2);
    CHECK(r.best_position == Vec3{0.0, 0.0, -0.5});

    const std::vector<Vec3> bad{{0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(optimize_candidates(s, bad, {0.0, 0.0, -0.5}, build_codebook(2)), InfeasibleRegion);
}

TEST_CASE("even grids are rejected")
{
    SceneConfig s;
    s.samples_per_axis = 4;
    CHECK_THROWS_AS(optimize_ma(s, build_codebook(2)), InvalidArgument);
}
