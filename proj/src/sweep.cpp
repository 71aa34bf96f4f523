// SPDX-License-Identifier: Apache-2.0
#include "matris/sweep.hpp"

#include <cmath>
#include <map>

#include "matris/csv.hpp"
#include "matris/errors.hpp"

namespace matris {

SweepKind parse_sweep_kind(const std::string& name)
{
    if (name == "size")
        return SweepKind::TrisSize;
    if (name == "distance")
        return SweepKind::MaDistance;
    if (name == "bits")
        return SweepKind::QuantizationBits;
    throw InvalidArgument("unknown sweep kind '" + name + "' (expected size, distance or bits)");
}

std::string to_string(SweepKind kind)
{
    switch (kind)
    {
    case SweepKind::TrisSize: return "size";
    case SweepKind::MaDistance: return "distance";
    case SweepKind::QuantizationBits: return "bits";
    }
    return "?";
}

std::string SweepMode::label() const
{
    if (codebook.is_continuous() && optimized)
        return "continuous";
    return codebook.label() + (optimized ? "-opt" : "-fixed");
}

SweepMode SweepMode::parse(const std::string& text)
{
    SweepMode mode;
    std::string base = text;
    if (text.ends_with("-opt"))
        base = text.substr(0, text.size() - 4);
    else if (text.ends_with("-fixed"))
    {
        base = text.substr(0, text.size() - 6);
        mode.optimized = false;
    }
    mode.codebook = PhaseCodebook::parse(base);
    return mode;
}

double mean_relative_snr(const OptimizationResult& result)
{
    double sum = 0.0;
    for (const SnrMapEntry& e : result.snr_map)
        sum += e.report.relative_snr;
    return sum / static_cast<double>(result.snr_map.size());
}

double average_relative_snr(const SceneConfig& scene, const PhaseCodebook& codebook, unsigned threads)
{
    return mean_relative_snr(optimize_ma(scene, codebook, threads));
}

namespace {

std::size_t as_side(double value)
{
    if (!(value >= 1.0 && value == std::floor(value)))
        throw InvalidArgument("TRIS size values must be positive integers, got " + format_number(value));
    return static_cast<std::size_t>(value);
}

/// One sweep point: optimizes each distinct codebook once and derives the
/// optimized and fixed rows from the same result.
std::vector<SweepRecord> evaluate_point(const SceneConfig& scene, const std::string& value_label,
                                        const std::vector<SweepMode>& modes, unsigned threads)
{
    std::map<unsigned, OptimizationResult> cache; // keyed by bits, 0 = continuous
    auto result_for = [&](const PhaseCodebook& cb) -> const OptimizationResult& {
        auto it = cache.find(cb.bits());
        if (it == cache.end())
            it = cache.emplace(cb.bits(), optimize_ma(scene, cb, threads)).first;
        return it->second;
    };

    const double reference_db = result_for(PhaseCodebook::continuous()).best_report.snr_db;
    const double rayleigh = rayleigh_distance(scene.tris(), scene.rf());

    std::vector<SweepRecord> rows;
    rows.reserve(modes.size());
    for (const SweepMode& mode : modes)
    {
        const OptimizationResult& r = result_for(mode.codebook);
        const SnrReport& report = mode.optimized ? r.best_report : r.baseline_report;
        SweepRecord rec;
        rec.sweep_value = value_label;
        rec.mode = mode.label();
        rec.snr_db = report.snr_db;
        rec.delta_vs_continuous_db = report.snr_db - reference_db;
        rec.relative_snr = report.relative_snr;
        rec.best_position = mode.optimized ? r.best_position : scene.region_center;
        rec.rayleigh_distance_m = rayleigh;
        rows.push_back(std::move(rec));
    }
    return rows;
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw InvalidArgument(what);
}

} // namespace

std::vector<SweepRecord> run_size_sweep(const SweepSpec& spec)
{
    require(spec.kind == SweepKind::TrisSize, "run_size_sweep needs a size sweep spec");
    require(!spec.values.empty(), "size sweep needs at least one value");
    require(!spec.modes.empty(), "size sweep needs at least one mode");

    std::vector<SweepRecord> out;
    for (double value : spec.values)
    {
        SceneConfig scene = spec.base_scene;
        scene.n_x = scene.n_y = as_side(value);
        auto rows = evaluate_point(scene, format_number(value), spec.modes, spec.threads);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

std::vector<SweepRecord> run_distance_sweep(const SweepSpec& spec)
{
    require(spec.kind == SweepKind::MaDistance, "run_distance_sweep needs a distance sweep spec");
    require(!spec.values.empty(), "distance sweep needs at least one value");
    require(!spec.modes.empty(), "distance sweep needs at least one mode");

    std::vector<SweepRecord> out;
    for (double distance : spec.values)
    {
        if (!(std::isfinite(distance) && distance > 0.0))
            throw InvalidArgument("MA distances must be positive, got " + format_number(distance));
        SceneConfig scene = spec.base_scene;
        scene.region_center.z = -distance;
        auto rows = evaluate_point(scene, format_number(distance), spec.modes, spec.threads);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

std::vector<SweepRecord> run_bits_sweep(const SweepSpec& spec)
{
    require(spec.kind == SweepKind::QuantizationBits, "run_bits_sweep needs a bits sweep spec");
    require(!spec.levels.empty(), "bits sweep needs at least one quantization level");

    std::vector<std::size_t> sizes = spec.sizes;
    if (sizes.empty())
        sizes.push_back(spec.base_scene.n_x);

    std::vector<SweepRecord> out;
    for (std::size_t side : sizes)
    {
        require(side >= 1, "TRIS sizes must be positive");
        SceneConfig scene = spec.base_scene;
        scene.n_x = scene.n_y = side;
        const double rayleigh = rayleigh_distance(scene.tris(), scene.rf());
        const double reference_db = optimize_ma(scene, PhaseCodebook::continuous(), spec.threads).best_report.snr_db;
        const std::string mode = "avg-" + std::to_string(side) + "x" + std::to_string(side);

        for (const PhaseCodebook& level : spec.levels)
        {
            const OptimizationResult r = optimize_ma(scene, level, spec.threads);

            SweepRecord rec;
            rec.sweep_value = level.is_continuous() ? "continuous" : std::to_string(level.bits());
            rec.mode = mode;
            rec.snr_db = r.best_report.snr_db;
            rec.delta_vs_continuous_db = r.best_report.snr_db - reference_db;
            rec.relative_snr = mean_relative_snr(r);
            rec.best_position = r.best_position;
            rec.rayleigh_distance_m = rayleigh;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec)
{
    switch (spec.kind)
    {
    case SweepKind::TrisSize: return run_size_sweep(spec);
    case SweepKind::MaDistance: return run_distance_sweep(spec);
    case SweepKind::QuantizationBits: return run_bits_sweep(spec);
    }
    throw InvalidArgument("unknown sweep kind");
}

} // namespace matris
