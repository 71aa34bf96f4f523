// SPDX-License-Identifier: Apache-2.0
#include "matris/optimizer.hpp"

#include <optional>

#include "matris/errors.hpp"
#include "matris/parallel.hpp"

namespace matris {

SnrReport evaluate_position(const TrisGeometry& geom, const Vec3& ma_position, const UserLocation& user,
                            const RfConstants& rf, const RadioBudget& budget, const PhaseCodebook& codebook)
{
    const LinkState link = build_link_state(geom, ma_position, user, rf);
    const PhaseVector phases = quantize_vector(link, codebook);
    return snr_discrete(link, phases, budget, rf);
}

OptimizationResult optimize_candidates(const SceneConfig& scene, std::span<const Vec3> candidates,
                                       const Vec3& baseline, const PhaseCodebook& codebook, unsigned threads)
{
    scene.validate();
    const RfConstants rf = scene.rf();
    const TrisGeometry geom = scene.tris();

    std::vector<std::optional<SnrReport>> reports(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        try
        {
            reports[i] = evaluate_position(geom, candidates[i], scene.user, rf, scene.budget, codebook);
        }
        catch (const SingularGeometry&)
        {
            reports[i].reset();
        }
    });

    OptimizationResult result;
    result.snr_map.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
    {
        if (!reports[i])
        {
            result.excluded.push_back(candidates[i]);
            continue;
        }
        result.snr_map.push_back({candidates[i], *reports[i]});
        const SnrMapEntry& entry = result.snr_map.back();
        // strict comparison: the first maximum in grid order wins
        if (result.snr_map.size() == 1 || entry.report.snr_linear > result.best_report.snr_linear)
        {
            result.best_index = result.snr_map.size() - 1;
            result.best_report = entry.report;
            result.best_position = entry.position;
        }
    }
    if (result.snr_map.empty())
        throw InfeasibleRegion("every MA candidate coincides with a TRIS element");

    result.baseline_report = evaluate_position(geom, baseline, scene.user, rf, scene.budget, codebook);
    return result;
}

OptimizationResult optimize_ma(const SceneConfig& scene, const PhaseCodebook& codebook, unsigned threads)
{
    const MaRegion region = scene.region();
    region.validate();
    if (region.samples_per_axis > 1 && region.side_length > 0.0 && region.samples_per_axis % 2 == 0)
        throw InvalidArgument("samples_per_axis must be odd so the region center is a candidate");
    const std::vector<Vec3> candidates = enumerate_ma_candidates(region);
    return optimize_candidates(scene, candidates, region.center, codebook, threads);
}

double optimized_vs_fixed_gain(const SceneConfig& scene, const PhaseCodebook& codebook, unsigned threads)
{
    const OptimizationResult r = optimize_ma(scene, codebook, threads);
    return r.best_report.snr_db - r.baseline_report.snr_db;
}

} // namespace matris
