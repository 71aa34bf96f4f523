// SPDX-License-Identifier: Apache-2.0
#include "matris/csv.hpp"

#include <cmath>
#include <cstdio>

namespace matris {

std::string format_number(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records)
{
    os << kSweepCsvHeader << '\n';
    for (const SweepRecord& r : records)
    {
        os << r.sweep_value << ',' << r.mode << ',' << format_number(r.snr_db) << ','
           << format_number(r.delta_vs_continuous_db) << ',' << format_number(r.relative_snr) << ','
           << format_number(r.best_position.x) << ',' << format_number(r.best_position.y) << ','
           << format_number(r.best_position.z) << ',' << format_number(r.rayleigh_distance_m) << '\n';
    }
}

void write_snr_map_csv(std::ostream& os, const OptimizationResult& result)
{
    os << kSnrMapCsvHeader << '\n';
    for (const SnrMapEntry& e : result.snr_map)
    {
        os << format_number(e.position.x) << ',' << format_number(e.position.y) << ','
           << format_number(e.position.z) << ',' << format_number(e.report.snr_db) << ','
           << format_number(e.report.relative_snr) << '\n';
    }
}

void write_summary(std::ostream& os, const SceneConfig& scene, const PhaseCodebook& codebook,
                   const OptimizationResult& result)
{
    const double rayleigh = rayleigh_distance(scene.tris(), scene.rf());
    const double center_distance = std::fabs(scene.region_center.z);
    const Vec3& best = result.best_position;

    os << "codebook: " << codebook.label() << '\n'
       << "tris: " << scene.n_x << "x" << scene.n_y << '\n'
       << "candidates_evaluated: " << result.snr_map.size() << '\n'
       << "candidates_excluded: " << result.excluded.size() << '\n'
       << "best_position_m: [" << format_number(best.x) << ", " << format_number(best.y) << ", "
       << format_number(best.z) << "]\n"
       << "snr_db: " << format_number(result.best_report.snr_db) << '\n'
       << "upper_bound_db: " << format_number(result.best_report.upper_bound_db) << '\n'
       << "relative_snr: " << format_number(result.best_report.relative_snr) << '\n'
       << "center_snr_db: " << format_number(result.baseline_report.snr_db) << '\n'
       << "ma_gain_db: " << format_number(result.best_report.snr_db - result.baseline_report.snr_db) << '\n'
       << "rayleigh_distance_m: " << format_number(rayleigh) << '\n'
       << "ma_center_field: " << (center_distance < rayleigh ? "near" : "far") << '\n';
}

} // namespace matris
