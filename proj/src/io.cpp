// SPDX-License-Identifier: Apache-2.0

#include "beamtrace/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "beamtrace/errors.hpp"
#include "beamtrace/textio.hpp"

namespace beamtrace {

using nlohmann::json;

std::string to_string(ReceptionMode mode) {
    switch (mode) {
        case ReceptionMode::QuasiOmniFixed: return "quasi";
        case ReceptionMode::SingleBeamSteered: return "single";
        case ReceptionMode::DualBeamSteered: return "dual";
    }
    return "dual";
}

std::string to_string(NormalizationMode mode) {
    switch (mode) {
        case NormalizationMode::PaperVectorNorm: return "paper";
        case NormalizationMode::ElementwiseConstantModulus: return "constant_modulus";
        case NormalizationMode::UnitPower: return "unit_power";
    }
    return "paper";
}

ReceptionMode reception_mode_from_string(const std::string& s) {
    if (s == "quasi") return ReceptionMode::QuasiOmniFixed;
    if (s == "single") return ReceptionMode::SingleBeamSteered;
    if (s == "dual") return ReceptionMode::DualBeamSteered;
    throw ConfigError("unknown reception mode '" + s + "' (expected quasi|single|dual)");
}

NormalizationMode normalization_from_string(const std::string& s) {
    if (s == "paper") return NormalizationMode::PaperVectorNorm;
    if (s == "constant_modulus") return NormalizationMode::ElementwiseConstantModulus;
    if (s == "unit_power") return NormalizationMode::UnitPower;
    throw ConfigError("unknown normalization '" + s +
                      "' (expected paper|constant_modulus|unit_power)");
}

namespace {

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object()) {
        throw ConfigError(where + " must be a JSON object");
    }
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError("unknown config key '" + where + "." + item.key() + "'");
        }
    }
}

double get_positive(const json& j, const char* key, double fallback, const std::string& where) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j[key].is_number()) {
        throw ConfigError(where + "." + key + " must be a number");
    }
    const double v = j[key].get<double>();
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(where + "." + key + " must be positive and finite");
    }
    return v;
}

ArrayGeometry array_from_json(const json& j, const ArrayGeometry& fallback,
                              const std::string& where) {
    check_keys(j, where, {"m", "n", "dx_wavelengths", "dy_wavelengths"});
    ArrayGeometry geo = fallback;
    if (j.contains("m")) geo.m_count = j["m"].get<int>();
    if (j.contains("n")) geo.n_count = j["n"].get<int>();
    if (geo.m_count < 1 || geo.n_count < 1) {
        throw ConfigError(where + ": array dimensions must be at least 1x1");
    }
    geo.dx_wavelengths = get_positive(j, "dx_wavelengths", geo.dx_wavelengths, where);
    geo.dy_wavelengths = get_positive(j, "dy_wavelengths", geo.dy_wavelengths, where);
    return geo;
}

json array_to_json(const ArrayGeometry& geo) {
    return {{"m", geo.m_count},
            {"n", geo.n_count},
            {"dx_wavelengths", geo.dx_wavelengths},
            {"dy_wavelengths", geo.dy_wavelengths}};
}

RadioConfig radio_from_json(const json& j) {
    check_keys(j, "radio",
               {"carrier_hz", "bandwidth_hz", "temperature_k", "noise_figure_db_hmd",
                "noise_figure_db_ap", "tx_power_dbm_per_ap", "fov_half_angle_deg",
                "snr_outage_threshold_db"});
    RadioConfig r;
    r.carrier_hz = get_positive(j, "carrier_hz", r.carrier_hz, "radio");
    r.bandwidth_hz = get_positive(j, "bandwidth_hz", r.bandwidth_hz, "radio");
    r.temperature_k = get_positive(j, "temperature_k", r.temperature_k, "radio");
    if (j.contains("noise_figure_db_hmd")) r.noise_figure_db_hmd = j["noise_figure_db_hmd"].get<double>();
    if (j.contains("noise_figure_db_ap")) r.noise_figure_db_ap = j["noise_figure_db_ap"].get<double>();
    if (j.contains("tx_power_dbm_per_ap")) r.tx_power_dbm_per_ap = j["tx_power_dbm_per_ap"].get<double>();
    if (j.contains("fov_half_angle_deg")) r.fov_half_angle_deg = j["fov_half_angle_deg"].get<double>();
    if (!(r.fov_half_angle_deg > 0.0) || r.fov_half_angle_deg > 180.0) {
        throw ConfigError("radio.fov_half_angle_deg must be in (0, 180]");
    }
    if (j.contains("snr_outage_threshold_db") && !j["snr_outage_threshold_db"].is_null()) {
        r.snr_outage_threshold_db = j["snr_outage_threshold_db"].get<double>();
    }
    return r;
}

json radio_to_json(const RadioConfig& r) {
    json j{{"carrier_hz", r.carrier_hz},
           {"bandwidth_hz", r.bandwidth_hz},
           {"temperature_k", r.temperature_k},
           {"noise_figure_db_hmd", r.noise_figure_db_hmd},
           {"noise_figure_db_ap", r.noise_figure_db_ap},
           {"tx_power_dbm_per_ap", r.tx_power_dbm_per_ap},
           {"fov_half_angle_deg", r.fov_half_angle_deg}};
    j["snr_outage_threshold_db"] =
        r.snr_outage_threshold_db ? json(*r.snr_outage_threshold_db) : json(nullptr);
    return j;
}

}  // namespace

json config_to_json(const ScenarioConfig& cfg) {
    json j{{"room_x_m", cfg.room_x_m},
           {"room_y_m", cfg.room_y_m},
           {"ap_height_m", cfg.ap_height_m},
           {"hmd_height_m", cfg.hmd_height_m},
           {"hmd_ap_distance_m", cfg.hmd_ap_distance_m},
           {"separation_deg", cfg.separation_deg},
           {"ap_count", cfg.ap_count},
           {"mode", to_string(cfg.mode)},
           {"normalization", to_string(cfg.normalization)},
           {"power_coefficients", cfg.power_coefficients},
           {"radio", radio_to_json(cfg.radio)},
           {"hmd_array", array_to_json(cfg.hmd_array)},
           {"ap_array", array_to_json(cfg.ap_array)},
           {"quasi_omni_array", array_to_json(cfg.quasi_omni_array)}};
    return j;
}

ScenarioConfig config_from_json(const json& j) {
    check_keys(j, "config",
               {"room_x_m", "room_y_m", "ap_height_m", "hmd_height_m", "hmd_ap_distance_m",
                "separation_deg", "ap_count", "mode", "normalization", "power_coefficients",
                "radio", "hmd_array", "ap_array", "quasi_omni_array"});
    ScenarioConfig cfg;
    cfg.room_x_m = get_positive(j, "room_x_m", cfg.room_x_m, "config");
    cfg.room_y_m = get_positive(j, "room_y_m", cfg.room_y_m, "config");
    cfg.ap_height_m = get_positive(j, "ap_height_m", cfg.ap_height_m, "config");
    cfg.hmd_height_m = get_positive(j, "hmd_height_m", cfg.hmd_height_m, "config");
    cfg.hmd_ap_distance_m =
        get_positive(j, "hmd_ap_distance_m", cfg.hmd_ap_distance_m, "config");
    if (j.contains("separation_deg")) {
        cfg.separation_deg = j["separation_deg"].get<double>();
        if (!std::isfinite(cfg.separation_deg) || cfg.separation_deg < 0.0 ||
            cfg.separation_deg > 180.0) {
            throw ConfigError("config.separation_deg must be in [0, 180]");
        }
    }
    if (j.contains("ap_count")) {
        cfg.ap_count = j["ap_count"].get<int>();
        if (cfg.ap_count < 1) {
            throw ConfigError("config.ap_count must be at least 1");
        }
    }
    if (j.contains("mode")) {
        cfg.mode = reception_mode_from_string(j["mode"].get<std::string>());
    }
    if (j.contains("normalization")) {
        cfg.normalization = normalization_from_string(j["normalization"].get<std::string>());
    }
    if (j.contains("power_coefficients")) {
        cfg.power_coefficients = j["power_coefficients"].get<std::vector<double>>();
    }
    if (j.contains("radio")) {
        cfg.radio = radio_from_json(j["radio"]);
    }
    if (j.contains("hmd_array")) {
        cfg.hmd_array = array_from_json(j["hmd_array"], cfg.hmd_array, "hmd_array");
    }
    if (j.contains("ap_array")) {
        cfg.ap_array = array_from_json(j["ap_array"], cfg.ap_array, "ap_array");
    }
    if (j.contains("quasi_omni_array")) {
        cfg.quasi_omni_array =
            array_from_json(j["quasi_omni_array"], cfg.quasi_omni_array, "quasi_omni_array");
    }
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config JSON parse error: " + std::string(e.what()));
    }
    return config_from_json(j);
}

namespace {

std::string db_or_inf(double linear) {
    return format_double(linear > 0.0 ? 10.0 * std::log10(linear)
                                      : -std::numeric_limits<double>::infinity());
}

}  // namespace

std::string timeseries_csv(const RunResult& result) {
    const std::size_t ap_count = result.samples.empty() ? 0 : result.samples[0].aps.size();
    std::ostringstream out;
    out << "t_ms";
    for (std::size_t l = 1; l <= ap_count; ++l) {
        out << ",theta_mis_" << l << ",phi_mis_" << l;
    }
    for (std::size_t l = 1; l <= ap_count; ++l) {
        out << ",aoa_az_" << l << ",aoa_el_" << l;
    }
    for (std::size_t l = 1; l <= ap_count; ++l) {
        out << ",in_fov_" << l;
    }
    for (std::size_t l = 1; l <= ap_count; ++l) {
        out << ",g_tx_" << l << "_db";
    }
    for (std::size_t l = 1; l <= ap_count; ++l) {
        out << ",g_rx_" << l << "_db";
    }
    out << ",rx_dbm,snr_db,outage\n";

    for (const SampleResult& s : result.samples) {
        out << format_int(s.t_ms);
        for (const PerApSample& ap : s.aps) {
            out << ',' << format_double(ap.theta_mis_deg) << ','
                << format_double(ap.phi_mis_deg);
        }
        for (const PerApSample& ap : s.aps) {
            out << ',' << format_double(ap.aoa_az_deg) << ',' << format_double(ap.aoa_el_deg);
        }
        for (const PerApSample& ap : s.aps) {
            out << ',' << (ap.in_fov ? '1' : '0');
        }
        for (const PerApSample& ap : s.aps) {
            out << ',' << db_or_inf(ap.g_tx);
        }
        for (const PerApSample& ap : s.aps) {
            out << ',' << db_or_inf(ap.g_rx);
        }
        out << ',' << format_double(s.rx_power_dbm) << ',' << format_double(s.snr_db) << ','
            << (s.outage ? '1' : '0') << '\n';
    }
    return out.str();
}

std::string metrics_json_text(const RunMetrics& metrics, const std::string& timeseries_name) {
    json j{{"outage_rate", metrics.outage_rate},
           {"samples_total", metrics.samples_total},
           {"samples_outage", metrics.samples_outage},
           {"timeseries", timeseries_name}};
    if (metrics.rx_level_dbm) {
        const RxStats& s = *metrics.rx_level_dbm;
        j["rx_level_dbm"] = {{"min", s.min},     {"p5", s.p5},   {"median", s.median},
                             {"mean", s.mean},   {"p95", s.p95}, {"max", s.max}};
    } else {
        j["rx_level_dbm"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string manifest_json_text(const ScenarioConfig& cfg, const std::string& trace_path,
                               const std::string& trace_digest, std::size_t trace_samples,
                               const std::vector<std::string>& outputs, std::int64_t wall_ms) {
    json j{{"tool", kToolName},
           {"version", kToolVersion},
           {"config", config_to_json(cfg)},
           {"trace",
            {{"path", trace_path}, {"fnv1a64", trace_digest}, {"samples", trace_samples}}},
           {"outputs", outputs},
           {"wall_ms", wall_ms}};
    return j.dump(2) + "\n";
}

std::string matrix_csv(const std::string& corner_label, const std::vector<double>& row_values,
                       const std::vector<double>& col_values,
                       const std::vector<std::vector<double>>& cells, bool as_db) {
    std::ostringstream out;
    out << corner_label;
    for (double c : col_values) {
        out << ',' << format_double(c);
    }
    out << '\n';
    for (std::size_t i = 0; i < row_values.size(); ++i) {
        out << format_double(row_values[i]);
        for (std::size_t jcol = 0; jcol < col_values.size(); ++jcol) {
            const double v = cells[i][jcol];
            out << ',' << (as_db ? db_or_inf(v) : format_double(v));
        }
        out << '\n';
    }
    return out.str();
}

ArrayGeometry parse_array_spec(const std::string& spec) {
    const std::size_t x = spec.find('x');
    std::int64_t m = 0, n = 0;
    if (x == std::string::npos || !parse_int(spec.substr(0, x), m) ||
        !parse_int(spec.substr(x + 1), n) || m < 1 || n < 1) {
        throw ConfigError("bad array spec '" + spec + "' (expected MxN, e.g. 8x8)");
    }
    return ArrayGeometry{static_cast<int>(m), static_cast<int>(n)};
}

std::vector<BeamSpec> parse_beams_spec(const std::string& spec) {
    std::vector<BeamSpec> beams;
    std::istringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        std::istringstream ps(part);
        std::string field;
        double vals[3];
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ps, field, ',') || !parse_double(field, vals[i])) {
                throw ConfigError("bad beam spec '" + part +
                                  "' (expected theta_deg,phi_deg,eta)");
            }
        }
        if (std::getline(ps, field, ',')) {
            throw ConfigError("bad beam spec '" + part + "': too many fields");
        }
        beams.push_back({vals[0], vals[1], vals[2]});
    }
    if (beams.empty()) {
        throw ConfigError("empty beams spec");
    }
    return beams;
}

std::vector<double> parse_grid_spec(const std::string& spec) {
    double start = 0.0, stop = 0.0, step = 0.0;
    const std::size_t c1 = spec.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    if (c2 == std::string::npos || !parse_double(spec.substr(0, c1), start) ||
        !parse_double(spec.substr(c1 + 1, c2 - c1 - 1), stop) ||
        !parse_double(spec.substr(c2 + 1), step)) {
        throw ConfigError("bad grid spec '" + spec + "' (expected start:stop:step)");
    }
    if (!(step > 0.0) || stop < start) {
        throw ConfigError("bad grid spec '" + spec + "': need stop >= start and step > 0");
    }
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid.push_back(start + static_cast<double>(i) * step);
    }
    return grid;
}

std::vector<double> parse_value_list(const std::string& spec) {
    std::vector<double> values;
    std::istringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        double v = 0.0;
        if (!parse_double(part, v)) {
            throw ConfigError("bad value '" + part + "' in list '" + spec + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw ConfigError("empty value list");
    }
    return values;
}

}  // namespace beamtrace
