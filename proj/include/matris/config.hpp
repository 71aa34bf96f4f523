// SPDX-License-Identifier: Apache-2.0
//
// Scenario files: YAML with sections rf, tris, ma_region, user, budget and
// codebook. Every key is optional and unknown keys are rejected; see
// configs/default.yaml for the full list with defaults.
#pragma once

#include <filesystem>
#include <string>

#include "matris/scene.hpp"

namespace matris {

/// Throws ConfigError naming the offending key.
SceneConfig parse_config(const std::filesystem::path& path);
SceneConfig parse_config_string(const std::string& text);

/// Emits every field, so parse_config_string(serialize_config(s)) == s.
std::string serialize_config(const SceneConfig& scene);

} // namespace matris
