// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps behind the three experiment families: SNR vs TRIS size,
// SNR vs MA distance, and average relative SNR vs quantization level.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matris/optimizer.hpp"

namespace matris {

enum class SweepKind
{
    TrisSize,
    MaDistance,
    QuantizationBits,
};

/// "size" / "distance" / "bits".
SweepKind parse_sweep_kind(const std::string& name);
std::string to_string(SweepKind kind);

/// A codebook paired with whether the MA is optimized or left at the center.
struct SweepMode
{
    PhaseCodebook codebook = PhaseCodebook::continuous();
    bool optimized = true;

    /// "continuous", "1bit-opt", "2bit-fixed", ... ("-opt" is implied when
    /// the suffix is absent).
    std::string label() const;
    static SweepMode parse(const std::string& text);
};

struct SweepSpec
{
    SweepKind kind = SweepKind::TrisSize;
    SceneConfig base_scene;

    /// TrisSize: square side counts. MaDistance: region-center distance in m.
    std::vector<double> values;
    /// QuantizationBits: the levels to average over.
    std::vector<PhaseCodebook> levels;
    /// QuantizationBits: square side counts; empty means base_scene.n_x.
    std::vector<std::size_t> sizes;
    /// TrisSize and MaDistance.
    std::vector<SweepMode> modes;

    unsigned threads = 1;
};

struct SweepRecord
{
    std::string sweep_value;
    std::string mode;
    double snr_db = 0.0;
    double delta_vs_continuous_db = 0.0;
    double relative_snr = 0.0;
    Vec3 best_position;
    double rayleigh_distance_m = 0.0;
};

std::vector<SweepRecord> run_size_sweep(const SweepSpec& spec);
std::vector<SweepRecord> run_distance_sweep(const SweepSpec& spec);
std::vector<SweepRecord> run_bits_sweep(const SweepSpec& spec);
/// Dispatches on spec.kind.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// Mean of SNR / SNR_UB over the evaluated candidates of a search.
double mean_relative_snr(const OptimizationResult& result);

/// Mean of SNR / SNR_UB over every evaluated candidate of the MA grid.
double average_relative_snr(const SceneConfig& scene, const PhaseCodebook& codebook, unsigned threads = 1);

} // namespace matris
