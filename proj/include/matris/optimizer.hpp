// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive MA placement search. TRIS phases are a closed-form function of
// the placement (quantized ideal compensation), so a single pass over the
// candidate grid solves the joint placement / phase problem.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "matris/scene.hpp"

namespace matris {

struct SnrMapEntry
{
    Vec3 position;
    SnrReport report;
};

struct OptimizationResult
{
    Vec3 best_position;
    SnrReport best_report;
    std::size_t best_index = 0;       // into snr_map
    std::vector<SnrMapEntry> snr_map; // evaluated candidates, grid order
    std::vector<Vec3> excluded;       // candidates sitting on a TRIS element
    SnrReport baseline_report;        // MA left at the region center
};

/// Evaluates one MA placement: link state, quantized phases, SNR.
SnrReport evaluate_position(const TrisGeometry& geom, const Vec3& ma_position, const UserLocation& user,
                            const RfConstants& rf, const RadioBudget& budget, const PhaseCodebook& codebook);

/// Searches an explicit candidate list. Ties go to the lowest index.
/// `baseline` is evaluated separately and reported as the fixed-MA reference.
/// Throws InfeasibleRegion when every candidate is excluded.
OptimizationResult optimize_candidates(const SceneConfig& scene, std::span<const Vec3> candidates,
                                       const Vec3& baseline, const PhaseCodebook& codebook, unsigned threads = 1);

/// Searches the scene's MA grid. The grid must contain its center (odd
/// samples_per_axis, a single sample, or a = 0).
OptimizationResult optimize_ma(const SceneConfig& scene, const PhaseCodebook& codebook, unsigned threads = 1);

/// SNR(best) - SNR(center), in dB.
double optimized_vs_fixed_gain(const SceneConfig& scene, const PhaseCodebook& codebook, unsigned threads = 1);

} // namespace matris
