// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "beamtrace/scenario.hpp"

namespace beamtrace {

inline constexpr const char* kToolName = "beamtrace";
inline constexpr const char* kToolVersion = "0.1.0";

std::string to_string(ReceptionMode mode);
std::string to_string(NormalizationMode mode);
ReceptionMode reception_mode_from_string(const std::string& s);
NormalizationMode normalization_from_string(const std::string& s);

/// Config <-> JSON. Parsing is strict (unknown keys are errors) and every
/// field defaults to the standard setup, so "{}" is a complete config.
nlohmann::json config_to_json(const ScenarioConfig& cfg);
ScenarioConfig config_from_json(const nlohmann::json& j);
ScenarioConfig load_config(const std::filesystem::path& path);

/// One row per sample; per-AP column groups (theta_mis_l, phi_mis_l, ...).
std::string timeseries_csv(const RunResult& result);

std::string metrics_json_text(const RunMetrics& metrics, const std::string& timeseries_name);

std::string manifest_json_text(const ScenarioConfig& cfg, const std::string& trace_path,
                               const std::string& trace_digest, std::size_t trace_samples,
                               const std::vector<std::string>& outputs, std::int64_t wall_ms);

/// Matrix export: corner label, column headers, then one row per row value.
std::string matrix_csv(const std::string& corner_label, const std::vector<double>& row_values,
                       const std::vector<double>& col_values,
                       const std::vector<std::vector<double>>& cells, bool as_db);

// CLI spec parsers. All throw ConfigError on malformed input.
ArrayGeometry parse_array_spec(const std::string& spec);            // "8x8"
std::vector<BeamSpec> parse_beams_spec(const std::string& spec);    // "30,0,0.5;-30,0,0.5"
std::vector<double> parse_grid_spec(const std::string& spec);       // "-90:90:1"
std::vector<double> parse_value_list(const std::string& spec);      // "20,60,100,140"

}  // namespace beamtrace
