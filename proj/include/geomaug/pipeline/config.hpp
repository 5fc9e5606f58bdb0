#pragma once

#include <filesystem>

#include "json.hpp"

#include "geomaug/pipeline/stage.hpp"

namespace geomaug::pipeline {

/// JSON form:
///   {"name": "...", "seed": 7, "stages": [{"kind": "RandomRotate", "p": 0.4, "degrees": 10}, ...]}
/// Parameters sit next to "kind"/"p"/"label"; see README for one example per kind.
/// Missing parameters take their defaults; unknown keys are rejected.
nlohmann::json to_json(const PipelineSpec& spec);
PipelineSpec spec_from_json(const nlohmann::json& doc);

/// Read and validate a config file. Throws IoError / ConfigError.
PipelineSpec load_spec(const std::filesystem::path& path);
void save_spec(const PipelineSpec& spec, const std::filesystem::path& path);

}  // namespace geomaug::pipeline
