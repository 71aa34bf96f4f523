// SPDX-License-Identifier: Apache-2.0
#include "matris/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

#include "matris/config.hpp"
#include "matris/csv.hpp"
#include "matris/errors.hpp"
#include "matris/optimizer.hpp"

namespace matris {
namespace {

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
    {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        parts.push_back(b == std::string::npos ? std::string{} : item.substr(b, e - b + 1));
    }
    return parts;
}

double to_double(const std::string& token)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw InvalidArgument("not a number: '" + token + "'");
    return v;
}

PhaseCodebook parse_level(const std::string& token)
{
    if (token == "continuous")
        return PhaseCodebook::continuous();
    if (token.ends_with("bit"))
        return PhaseCodebook::parse(token);
    const double bits = to_double(token);
    if (bits != static_cast<unsigned>(bits))
        throw InvalidArgument("bit counts must be integers: '" + token + "'");
    return PhaseCodebook::discrete(static_cast<unsigned>(bits));
}

int write_file(const std::filesystem::path& path, const std::string& content, std::ostream& err)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
    {
        err << "error: cannot open '" << path.string() << "' for writing\n";
        return kExitIo;
    }
    f << content;
    f.flush();
    if (!f)
    {
        err << "error: failed writing '" << path.string() << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

const char* kDefaultSizeModes = "continuous,2bit-opt,1bit-opt,2bit-fixed,1bit-fixed";
const char* kDefaultDistanceModes = "continuous,2bit-opt,1bit-opt";
const char* kDefaultSizeValues = "10,12,14,16,18,20";
const char* kDefaultDistanceValues = "1:2.75:12";
const char* kDefaultBitsValues = "1,2,3,4,continuous";

} // namespace

std::vector<double> parse_value_list(const std::string& text)
{
    std::vector<double> values;
    for (const std::string& item : split(text, ','))
    {
        const auto range = split(item, ':');
        if (range.size() == 1)
        {
            values.push_back(to_double(item));
            continue;
        }
        if (range.size() != 3)
            throw InvalidArgument("ranges are written start:stop:count, got '" + item + "'");
        const double start = to_double(range[0]);
        const double stop = to_double(range[1]);
        const double count = to_double(range[2]);
        if (!(count >= 1.0 && count == static_cast<double>(static_cast<long>(count))))
            throw InvalidArgument("range count must be a positive integer in '" + item + "'");
        const long n = static_cast<long>(count);
        for (long k = 0; k < n; ++k)
            values.push_back(n == 1 ? start : start + static_cast<double>(k) * (stop - start) / static_cast<double>(n - 1));
    }
    if (values.empty())
        throw InvalidArgument("empty value list");
    return values;
}

int cmd_optimize(const SceneConfig& scene, const std::optional<std::filesystem::path>& map_csv,
                 const std::optional<std::filesystem::path>& summary_path, unsigned threads, std::ostream& out,
                 std::ostream& err)
{
    const OptimizationResult result = optimize_ma(scene, scene.codebook, threads);

    std::ostringstream summary;
    write_summary(summary, scene, scene.codebook, result);
    out << summary.str();

    if (map_csv)
    {
        std::ostringstream csv;
        write_snr_map_csv(csv, result);
        if (int rc = write_file(*map_csv, csv.str(), err); rc != kExitOk)
            return rc;
    }
    if (summary_path)
        return write_file(*summary_path, summary.str(), err);
    return kExitOk;
}

int cmd_sweep(const SweepSpec& spec, const std::filesystem::path& output, std::ostream& err)
{
    const auto records = run_sweep(spec);
    std::ostringstream csv;
    write_sweep_csv(csv, records);
    return write_file(output, csv.str(), err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Movable-antenna + transmissive-RIS near-field SNR simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    unsigned threads = 1;
    app.add_option("--config", config_path, "Scenario YAML file (empty or missing keys take defaults)");
    app.add_option("--threads", threads, "Worker threads; results do not depend on it")
        ->check(CLI::Range(1u, 1024u));

    auto* optimize = app.add_subcommand("optimize", "Search the MA region for the best placement");
    std::string codebook_override;
    std::string map_path;
    std::string summary_path;
    optimize->add_option("--codebook", codebook_override, "Override codebook: continuous or <b>bit");
    optimize->add_option("--out", map_path, "Write the per-candidate SNR map CSV here");
    optimize->add_option("--summary", summary_path, "Also write the summary to this file");

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
    std::string kind;
    std::string values;
    std::string modes;
    std::string sizes;
    std::string sweep_out;
    sweep->add_option("--kind", kind, "size | distance | bits")->required();
    sweep->add_option("--values", values,
                      "size: TRIS sides; distance: metres (start:stop:count allowed); bits: 1,2,..,continuous");
    sweep->add_option("--modes", modes, "size/distance: continuous,<b>bit-opt,<b>bit-fixed,...");
    sweep->add_option("--sizes", sizes, "bits: TRIS sides to average over (default: config n_x)");
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    }
    catch (const CLI::ParseError& e)
    {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try
    {
        SceneConfig scene = config_path.empty() ? SceneConfig{} : parse_config(config_path);

        if (*optimize)
        {
            if (!codebook_override.empty())
                scene.codebook = PhaseCodebook::parse(codebook_override);
            std::optional<std::filesystem::path> map;
            std::optional<std::filesystem::path> summary;
            if (!map_path.empty())
                map = map_path;
            if (!summary_path.empty())
                summary = summary_path;
            return cmd_optimize(scene, map, summary, threads, out, err);
        }

        SweepSpec spec;
        spec.kind = parse_sweep_kind(kind);
        spec.base_scene = scene;
        spec.threads = threads;
        switch (spec.kind)
        {
        case SweepKind::TrisSize:
        case SweepKind::MaDistance: {
            const bool is_size = spec.kind == SweepKind::TrisSize;
            if (!sizes.empty())
                throw InvalidArgument("--sizes only applies to bits sweeps");
            spec.values = parse_value_list(values.empty() ? (is_size ? kDefaultSizeValues : kDefaultDistanceValues)
                                                          : values);
            for (const std::string& m : split(modes.empty() ? (is_size ? kDefaultSizeModes : kDefaultDistanceModes)
                                                            : modes,
                                              ','))
                spec.modes.push_back(SweepMode::parse(m));
            break;
        }
        case SweepKind::QuantizationBits:
            if (!modes.empty())
                throw InvalidArgument("--modes does not apply to bits sweeps; list levels in --values");
            for (const std::string& v : split(values.empty() ? kDefaultBitsValues : values, ','))
                spec.levels.push_back(parse_level(v));
            if (!sizes.empty())
                for (double s : parse_value_list(sizes))
                {
                    if (!(s >= 1.0 && s == static_cast<double>(static_cast<std::size_t>(s))))
                        throw InvalidArgument("--sizes must be positive integers");
                    spec.sizes.push_back(static_cast<std::size_t>(s));
                }
            break;
        }
        return cmd_sweep(spec, sweep_out, err);
    }
    catch (const ConfigError& e)
    {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const InfeasibleRegion& e)
    {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    }
    catch (const InvalidArgument& e)
    {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const SingularGeometry& e)
    {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace matris
