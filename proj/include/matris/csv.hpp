// SPDX-License-Identifier: Apache-2.0
//
// Tabular output. Column order and names are part of the external interface.
#pragma once

#include <ostream>
#include <span>
#include <string>

#include "matris/optimizer.hpp"
#include "matris/sweep.hpp"

namespace matris {

inline constexpr const char* kSweepCsvHeader =
    "sweep_value,mode,snr_db,delta_vs_continuous_db,relative_snr,best_x_m,best_y_m,best_z_m,rayleigh_m";
inline constexpr const char* kSnrMapCsvHeader = "x_m,y_m,z_m,snr_db,relative_snr";

/// printf "%.9g": 9 significant digits, locale independent.
std::string format_number(double value);

void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records);
void write_snr_map_csv(std::ostream& os, const OptimizationResult& result);

/// Human-readable `key: value` run summary for one optimization.
void write_summary(std::ostream& os, const SceneConfig& scene, const PhaseCodebook& codebook,
                   const OptimizationResult& result);

} // namespace matris
