// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matris/codebook.hpp"
#include "matris/csv.hpp"
#include "matris/optimizer.hpp"
#include "matris/sweep.hpp"

using namespace matris;

namespace {
constexpr double pi = std::numbers::pi;
int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail)
{
    std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

std::string fmt(const char* f, double a)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

SceneConfig sized(std::size_t n)
{
    SceneConfig s;
    s.n_x = s.n_y = n;
    return s;
}

std::vector<SweepMode> modes(std::initializer_list<const char*> labels)
{
    std::vector<SweepMode> m;
    for (const char* l : labels)
        m.push_back(SweepMode::parse(l));
    return m;
}

std::string sweep_csv(SweepSpec spec, unsigned threads)
{
    spec.threads = threads;
    const auto rows = run_sweep(spec);
    std::ostringstream os;
    write_sweep_csv(os, rows);
    return os.str();
}

void rayleigh_boundary()
{
    const SceneConfig s;
    const double r = rayleigh_distance(s.tris(), s.rf());
    report(1, std::fabs(r - 1.9186717) <= 1e-6, "Rayleigh boundary", fmt("%.10f m", r));
}

void upper_bound_attainment()
{
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<std::size_t> dim(1, 20);
    std::uniform_real_distribution<double> lateral(-0.5, 0.5), depth(0.05, 3.0), range(0.5, 20.0);
    const RfConstants rf(20e9);
    const RadioBudget budget;
    const std::vector<PhaseCodebook> discrete{build_codebook(1), build_codebook(2), build_codebook(3),
                                              build_codebook(4)};
    const int scenes = 1000;
    double worst_rel = 0.0;
    int violations = 0;
    for (int i = 0; i < scenes; ++i)
    {
        const auto geom = build_tris(dim(rng), dim(rng), rf.wavelength() / 2);
        const Vec3 ma{lateral(rng), lateral(rng), -depth(rng)};
        const UserLocation user{{lateral(rng), lateral(rng), range(rng)}};
        const auto link = build_link_state(geom, ma, user, rf);
        const auto c = snr_discrete(link, quantize_vector(link, PhaseCodebook::continuous()), budget, rf);
        worst_rel = std::max(worst_rel, std::fabs(c.snr_linear - c.upper_bound_linear) / c.upper_bound_linear);
        for (const auto& cb : discrete)
        {
            const auto d = snr_discrete(link, quantize_vector(link, cb), budget, rf);
            if (d.snr_linear > d.upper_bound_linear)
                ++violations;
        }
    }
    report(2, worst_rel <= 1e-12 && violations == 0, "Upper-bound attainment",
           std::to_string(scenes) + " scenes, max continuous rel err " + fmt("%.2e", worst_rel) +
               ", discrete violations " + std::to_string(violations));
}

void quantizer_oracle()
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    int mismatches = 0, non_idempotent = 0, bound_violations = 0;
    for (unsigned b = 1; b <= 8; ++b)
    {
        const auto cb = build_codebook(b);
        const double bound = pi / std::ldexp(1.0, static_cast<int>(b));
        for (int i = 0; i < 10000; ++i)
        {
            const double p = phase(rng);
            double best = cb.levels()[0];
            for (double level : cb.levels())
                if (circular_distance(p, level) < circular_distance(p, best))
                    best = level;
            const double q = quantize(p, cb);
            mismatches += q != best;
            non_idempotent += quantize(q, cb) != q;
            bound_violations += circular_distance(p, q) > bound + 1e-15;
        }
    }
    report(3, mismatches == 0 && non_idempotent == 0 && bound_violations == 0, "Quantizer oracle",
           "80000 phases, mismatches " + std::to_string(mismatches) + ", idempotence " +
               std::to_string(non_idempotent) + ", bound " + std::to_string(bound_violations));
}

void sinc_squared_loss()
{
    const SceneConfig s = sized(20);
    bool ok = true;
    std::string detail;
    for (unsigned b : {2u, 3u, 4u})
    {
        const double x = pi / std::ldexp(1.0, static_cast<int>(b));
        const double target = std::pow(std::sin(x) / x, 2);
        const double got = average_relative_snr(s, build_codebook(b), 8);
        ok = ok && std::fabs(got - target) <= 0.01;
        detail += "b=" + std::to_string(b) + " " + fmt("%.4f", got) + " vs " + fmt("%.4f", target) + "; ";
    }
    report(4, ok, "Sinc^2 loss at N=20x20", detail);
}

struct SizeRuns
{
    std::map<std::size_t, OptimizationResult> cont, one, two;
};

SizeRuns size_runs()
{
    SizeRuns r;
    for (std::size_t n : {10u, 12u, 14u, 16u, 18u, 20u})
    {
        const SceneConfig s = sized(n);
        r.cont.emplace(n, optimize_ma(s, PhaseCodebook::continuous(), 8));
        r.one.emplace(n, optimize_ma(s, build_codebook(1), 8));
        r.two.emplace(n, optimize_ma(s, build_codebook(2), 8));
    }
    return r;
}

void continuous_scaling(const SizeRuns& r)
{
    const double d400 = r.cont.at(20).best_report.snr_db - r.cont.at(10).best_report.snr_db;
    const double d144 = r.cont.at(12).best_report.snr_db - r.cont.at(10).best_report.snr_db;
    report(5, std::fabs(d400 - 12.03) <= 0.05 && std::fabs(d144 - 3.17) <= 0.02, "Continuous scaling",
           "400 vs 100: " + fmt("%.4f dB", d400) + ", 144 vs 100: " + fmt("%.4f dB", d144));
}

struct DistanceRuns
{
    std::vector<double> distances;
    std::vector<OptimizationResult> cont, one, two;
};

DistanceRuns distance_runs()
{
    DistanceRuns r;
    for (int k = 0; k < 12; ++k)
    {
        const double d = 1.0 + 1.75 * k / 11.0;
        SceneConfig s;
        s.region_center.z = -d;
        r.distances.push_back(d);
        r.cont.push_back(optimize_ma(s, PhaseCodebook::continuous(), 8));
        r.one.push_back(optimize_ma(s, build_codebook(1), 8));
        r.two.push_back(optimize_ma(s, build_codebook(2), 8));
    }
    return r;
}

void distance_shape(const DistanceRuns& r)
{
    bool decreasing = true;
    double min_c2 = 1e9, min_21 = 1e9;
    double worst_21_at = 0.0;
    for (std::size_t i = 0; i < r.distances.size(); ++i)
    {
        const double c = r.cont[i].best_report.snr_db;
        const double two = r.two[i].best_report.snr_db;
        const double one = r.one[i].best_report.snr_db;
        if (i > 0)
            decreasing = decreasing && c < r.cont[i - 1].best_report.snr_db &&
                         two < r.two[i - 1].best_report.snr_db && one < r.one[i - 1].best_report.snr_db;
        min_c2 = std::min(min_c2, c - two);
        if (two - one < min_21)
        {
            min_21 = two - one;
            worst_21_at = r.distances[i];
        }
    }
    const bool ok = decreasing && min_c2 >= 0.0 && min_21 >= 0.0;
    std::string detail = std::string("strictly decreasing ") + (decreasing ? "yes" : "no") +
                         ", min(cont - 2bit) " + fmt("%.4f dB", min_c2) + ", min(2bit - 1bit) " +
                         fmt("%.4f dB", min_21) + " at " + fmt("%.2f m", worst_21_at) + "; at 1.0 m " +
                         fmt("%.3f", r.cont[0].best_report.snr_db) + " / " +
                         fmt("%.3f", r.two[0].best_report.snr_db) + " / " + fmt("%.3f dB", r.one[0].best_report.snr_db);
    report(6, ok, "Distance shape and mode ordering", detail);
}

void bits_structure()
{
    SweepSpec spec;
    spec.kind = SweepKind::QuantizationBits;
    spec.levels = {build_codebook(1), build_codebook(2), build_codebook(3), build_codebook(4),
                   PhaseCodebook::continuous()};
    spec.sizes = {12, 16, 20};
    spec.threads = 8;
    const auto rows = run_sweep(spec);
    bool ok = rows.size() == 15;
    std::string detail = "1-bit:";
    for (std::size_t s = 0; ok && s < 3; ++s)
    {
        for (std::size_t k = 1; k < 5; ++k)
            ok = ok && rows[5 * s + k].relative_snr >= rows[5 * s + k - 1].relative_snr;
        ok = ok && std::fabs(rows[5 * s + 4].relative_snr - 1.0) <= 1e-12;
        if (s > 0)
            ok = ok && rows[5 * s].relative_snr < rows[5 * (s - 1)].relative_snr;
        detail += " " + rows[5 * s].mode + "=" + fmt("%.4f", rows[5 * s].relative_snr);
    }
    report(7, ok, "Quantization-level structure", detail);
}

void ma_gain(const SizeRuns& s, const DistanceRuns& d)
{
    int dominance_failures = 0;
    auto check = [&](const OptimizationResult& r) {
        dominance_failures += r.best_report.snr_linear < r.baseline_report.snr_linear;
    };
    for (const auto* m : {&s.cont, &s.one, &s.two})
        for (const auto& [n, r] : *m)
            check(r);
    for (const auto* v : {&d.cont, &d.one, &d.two})
        for (const auto& r : *v)
            check(r);
    double min_gain = 1e9;
    for (const auto& [n, r] : s.one)
        if (n >= 12)
            min_gain = std::min(min_gain, r.best_report.snr_db - r.baseline_report.snr_db);
    const double gain100 = s.one.at(10).best_report.snr_db - s.one.at(10).baseline_report.snr_db;
    report(8, dominance_failures == 0 && min_gain > 0.0, "MA-gain dominance",
           "dominance failures " + std::to_string(dominance_failures) + ", min 1-bit gain for N>=144 " +
               fmt("%.4f dB", min_gain) + ", at N=100 " + fmt("%.4f dB", gain100));
}

void determinism()
{
    SweepSpec size;
    size.kind = SweepKind::TrisSize;
    size.values = {10, 12, 14, 16, 18, 20};
    size.modes = modes({"continuous", "2bit-opt", "1bit-opt", "2bit-fixed", "1bit-fixed"});
    SweepSpec dist;
    dist.kind = SweepKind::MaDistance;
    for (int k = 0; k < 12; ++k)
        dist.values.push_back(1.0 + k);
    dist.modes = modes({"continuous", "2bit-opt", "1bit-opt"});
    SweepSpec bits;
    bits.kind = SweepKind::QuantizationBits;
    bits.levels = {build_codebook(1), build_codebook(2), build_codebook(3), build_codebook(4),
                   PhaseCodebook::continuous()};
    bits.sizes = {12, 16, 20};

    int differing = 0;
    for (const auto* spec : {&size, &dist, &bits})
        differing += sweep_csv(*spec, 1) != sweep_csv(*spec, 8);
    report(9, differing == 0, "Thread determinism",
           "size/distance/bits CSV at 1 vs 8 threads, differing outputs " + std::to_string(differing));
}

void performance()
{
    SweepSpec spec;
    spec.kind = SweepKind::TrisSize;
    spec.values = {10, 12, 14, 16, 18, 20};
    spec.modes = modes({"continuous", "2bit-opt", "1bit-opt", "2bit-fixed", "1bit-fixed"});
    spec.threads = 1;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = run_sweep(spec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(10, rows.size() == 30 && secs < 60.0, "Performance envelope",
           "6 sizes x 5 modes, 21x21 grid, single thread: " + fmt("%.2f s", secs));
}
} // namespace

int main()
{
    rayleigh_boundary();
    upper_bound_attainment();
    quantizer_oracle();
    sinc_squared_loss();
    const SizeRuns sizes = size_runs();
    continuous_scaling(sizes);
    const DistanceRuns distances = distance_runs();
    distance_shape(distances);
    bits_structure();
    ma_gain(sizes, distances);
    determinism();
    performance();
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
