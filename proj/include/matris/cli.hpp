// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "matris/scene.hpp"
#include "matris/sweep.hpp"

namespace matris {

enum ExitCode : int
{
    kExitOk = 0,
    kExitUsage = 1, // bad flags, config or values
    kExitIo = 2,
    kExitInfeasible = 3,
};

/// Runs one search and writes the snr map CSV (when `map_csv` is set) and
/// the summary (to `summary_path` when set, always to `out`).
int cmd_optimize(const SceneConfig& scene, const std::optional<std::filesystem::path>& map_csv,
                 const std::optional<std::filesystem::path>& summary_path, unsigned threads, std::ostream& out,
                 std::ostream& err);

/// Runs one sweep and writes its CSV to `output`.
int cmd_sweep(const SweepSpec& spec, const std::filesystem::path& output, std::ostream& err);

/// Parses a --values list: comma separated numbers, where any item may be a
/// `start:stop:count` inclusive linear range.
std::vector<double> parse_value_list(const std::string& text);

/// Full command line: `matris <optimize|sweep> [options]`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace matris
