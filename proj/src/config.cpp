// SPDX-License-Identifier: Apache-2.0
#include "matris/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "matris/errors.hpp"

namespace matris {
namespace {

const std::map<std::string, std::set<std::string>>& schema()
{
    static const std::map<std::string, std::set<std::string>> keys = {
        {"rf", {"carrier_frequency_hz", "speed_of_light"}},
        {"tris", {"n_x", "n_y", "spacing_over_lambda"}},
        {"ma_region", {"center_m", "side_length_over_lambda", "samples_per_axis", "orientation"}},
        {"user", {"position_m"}},
        {"budget", {"tx_power_dbm", "noise_dbm", "gamma", "gain_product", "pattern_product", "prefactor_db_offset"}},
        {"codebook", {"mode", "bits"}},
    };
    return keys;
}

class Section
{
  public:
    Section(YAML::Node node, std::string name) : node_(std::move(node)), name_(std::move(name)) {}

    std::string key(const std::string& k) const { return name_ + "." + k; }
    bool has(const std::string& k) const { return node_ && node_[k]; }

    double number(const std::string& k, double fallback) const
    {
        if (!has(k))
            return fallback;
        double v = 0.0;
        try
        {
            v = node_[k].as<double>();
        }
        catch (const YAML::Exception&)
        {
            throw ConfigError(key(k), "expected a number");
        }
        if (!std::isfinite(v))
            throw ConfigError(key(k), "must be finite");
        return v;
    }

    std::size_t count(const std::string& k, std::size_t fallback) const
    {
        if (!has(k))
            return fallback;
        long long v = 0;
        try
        {
            v = node_[k].as<long long>();
        }
        catch (const YAML::Exception&)
        {
            throw ConfigError(key(k), "expected an integer");
        }
        if (v < 1)
            throw ConfigError(key(k), "must be >= 1, got " + std::to_string(v));
        return static_cast<std::size_t>(v);
    }

    std::string text(const std::string& k, const std::string& fallback) const
    {
        if (!has(k))
            return fallback;
        if (!node_[k].IsScalar())
            throw ConfigError(key(k), "expected a string");
        return node_[k].as<std::string>();
    }

    Vec3 point(const std::string& k, const Vec3& fallback) const
    {
        if (!has(k))
            return fallback;
        const YAML::Node seq = node_[k];
        if (!seq.IsSequence() || seq.size() != 3)
            throw ConfigError(key(k), "expected a list of three numbers [x, y, z]");
        Vec3 v;
        try
        {
            v = {seq[0].as<double>(), seq[1].as<double>(), seq[2].as<double>()};
        }
        catch (const YAML::Exception&)
        {
            throw ConfigError(key(k), "expected a list of three numbers [x, y, z]");
        }
        if (!(std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z)))
            throw ConfigError(key(k), "coordinates must be finite");
        return v;
    }

  private:
    YAML::Node node_;
    std::string name_;
};

void check_keys(const YAML::Node& root)
{
    if (!root.IsMap())
        throw ConfigError("", "top level of the config must be a mapping of sections");
    for (const auto& section : root)
    {
        const std::string name = section.first.as<std::string>();
        auto it = schema().find(name);
        if (it == schema().end())
            throw ConfigError(name, "unknown section");
        if (section.second.IsNull())
            continue;
        if (!section.second.IsMap())
            throw ConfigError(name, "section must be a mapping");
        for (const auto& entry : section.second)
        {
            const std::string k = entry.first.as<std::string>();
            if (!it->second.contains(k))
                throw ConfigError(name + "." + k, "unknown key");
        }
    }
}

void expect(bool ok, const std::string& key, const std::string& what)
{
    if (!ok)
        throw ConfigError(key, what);
}

SceneConfig build_scene(const YAML::Node& root)
{
    SceneConfig s;
    if (!root || root.IsNull())
        return s;
    check_keys(root);

    const Section rf(root["rf"], "rf");
    s.carrier_frequency_hz = rf.number("carrier_frequency_hz", s.carrier_frequency_hz);
    expect(s.carrier_frequency_hz > 0.0, rf.key("carrier_frequency_hz"), "must be > 0");
    s.speed_of_light = rf.number("speed_of_light", s.speed_of_light);
    expect(s.speed_of_light > 0.0, rf.key("speed_of_light"), "must be > 0");

    const Section tris(root["tris"], "tris");
    s.n_x = tris.count("n_x", s.n_x);
    s.n_y = tris.count("n_y", s.n_y);
    s.spacing_over_lambda = tris.number("spacing_over_lambda", s.spacing_over_lambda);
    expect(s.spacing_over_lambda > 0.0, tris.key("spacing_over_lambda"), "must be > 0");

    const Section region(root["ma_region"], "ma_region");
    s.region_center = region.point("center_m", s.region_center);
    expect(s.region_center.z < 0.0, region.key("center_m"), "z must be < 0 (behind the TRIS)");
    s.side_length_over_lambda = region.number("side_length_over_lambda", s.side_length_over_lambda);
    expect(s.side_length_over_lambda >= 0.0, region.key("side_length_over_lambda"), "must be >= 0");
    s.samples_per_axis = region.count("samples_per_axis", s.samples_per_axis);
    const std::string orientation = region.text("orientation", "axial");
    if (orientation == "axial")
        s.orientation = RegionOrientation::Axial;
    else if (orientation == "parallel")
        s.orientation = RegionOrientation::Parallel;
    else
        throw ConfigError(region.key("orientation"), "expected 'axial' or 'parallel', got '" + orientation + "'");
    if (s.orientation == RegionOrientation::Axial)
    {
        const double half_side = 0.5 * s.side_length_over_lambda * s.rf().wavelength();
        expect(s.region_center.z + half_side <= 0.0, region.key("side_length_over_lambda"),
               "axial region would cross the TRIS plane");
    }

    const Section user(root["user"], "user");
    s.user.position = user.point("position_m", s.user.position);
    expect(s.user.position.z > 0.0, user.key("position_m"), "z must be > 0 (in front of the TRIS)");

    const Section budget(root["budget"], "budget");
    s.budget.tx_power_dbm = budget.number("tx_power_dbm", s.budget.tx_power_dbm);
    s.budget.noise_power_dbm = budget.number("noise_dbm", s.budget.noise_power_dbm);
    s.budget.link_gains.gamma = budget.number("gamma", s.budget.link_gains.gamma);
    expect(s.budget.link_gains.gamma >= 0.0 && s.budget.link_gains.gamma <= 1.0, budget.key("gamma"),
           "must lie in [0, 1]");
    s.budget.link_gains.gain_product = budget.number("gain_product", s.budget.link_gains.gain_product);
    expect(s.budget.link_gains.gain_product > 0.0, budget.key("gain_product"), "must be > 0");
    s.budget.link_gains.pattern_product = budget.number("pattern_product", s.budget.link_gains.pattern_product);
    expect(s.budget.link_gains.pattern_product > 0.0, budget.key("pattern_product"), "must be > 0");
    s.budget.prefactor_db_offset = budget.number("prefactor_db_offset", s.budget.prefactor_db_offset);

    const Section codebook(root["codebook"], "codebook");
    const std::string mode = codebook.text("mode", s.codebook.is_continuous() ? "continuous" : "discrete");
    if (mode == "continuous")
    {
        expect(!codebook.has("bits"), codebook.key("bits"), "not allowed with mode 'continuous'");
        s.codebook = PhaseCodebook::continuous();
    }
    else if (mode == "discrete")
    {
        const std::size_t bits = codebook.count("bits", s.codebook.is_continuous() ? 1 : s.codebook.bits());
        expect(bits <= kMaxCodebookBits, codebook.key("bits"), "must be <= " + std::to_string(kMaxCodebookBits));
        s.codebook = PhaseCodebook::discrete(static_cast<unsigned>(bits));
    }
    else
        throw ConfigError(codebook.key("mode"), "expected 'continuous' or 'discrete', got '" + mode + "'");

    try
    {
        s.validate();
    }
    catch (const InvalidArgument& e)
    {
        throw ConfigError("", e.what());
    }
    return s;
}

} // namespace

SceneConfig parse_config_string(const std::string& text)
{
    YAML::Node root;
    try
    {
        root = YAML::Load(text);
    }
    catch (const YAML::ParserException& e)
    {
        throw ConfigError("", std::string("malformed YAML: ") + e.what());
    }
    return build_scene(root);
}

SceneConfig parse_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("", "cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_string(buf.str());
}

std::string serialize_config(const SceneConfig& s)
{
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    auto point = [&](const Vec3& v) {
        out << YAML::Flow << YAML::BeginSeq << v.x << v.y << v.z << YAML::EndSeq;
    };

    out << YAML::BeginMap;
    out << YAML::Key << "rf" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "carrier_frequency_hz" << YAML::Value << s.carrier_frequency_hz;
    out << YAML::Key << "speed_of_light" << YAML::Value << s.speed_of_light;
    out << YAML::EndMap;

    out << YAML::Key << "tris" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "n_x" << YAML::Value << s.n_x;
    out << YAML::Key << "n_y" << YAML::Value << s.n_y;
    out << YAML::Key << "spacing_over_lambda" << YAML::Value << s.spacing_over_lambda;
    out << YAML::EndMap;

    out << YAML::Key << "ma_region" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "center_m" << YAML::Value;
    point(s.region_center);
    out << YAML::Key << "side_length_over_lambda" << YAML::Value << s.side_length_over_lambda;
    out << YAML::Key << "samples_per_axis" << YAML::Value << s.samples_per_axis;
    out << YAML::Key << "orientation" << YAML::Value
        << (s.orientation == RegionOrientation::Axial ? "axial" : "parallel");
    out << YAML::EndMap;

    out << YAML::Key << "user" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "position_m" << YAML::Value;
    point(s.user.position);
    out << YAML::EndMap;

    out << YAML::Key << "budget" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "tx_power_dbm" << YAML::Value << s.budget.tx_power_dbm;
    out << YAML::Key << "noise_dbm" << YAML::Value << s.budget.noise_power_dbm;
    out << YAML::Key << "gamma" << YAML::Value << s.budget.link_gains.gamma;
    out << YAML::Key << "gain_product" << YAML::Value << s.budget.link_gains.gain_product;
    out << YAML::Key << "pattern_product" << YAML::Value << s.budget.link_gains.pattern_product;
    out << YAML::Key << "prefactor_db_offset" << YAML::Value << s.budget.prefactor_db_offset;
    out << YAML::EndMap;

    out << YAML::Key << "codebook" << YAML::Value << YAML::BeginMap;
    if (s.codebook.is_continuous())
        out << YAML::Key << "mode" << YAML::Value << "continuous";
    else
    {
        out << YAML::Key << "mode" << YAML::Value << "discrete";
        out << YAML::Key << "bits" << YAML::Value << s.codebook.bits();
    }
    out << YAML::EndMap;
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

} // namespace matris
