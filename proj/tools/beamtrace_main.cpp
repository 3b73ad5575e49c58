// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "beamtrace/errors.hpp"
#include "beamtrace/io.hpp"
#include "beamtrace/scenario.hpp"
#include "beamtrace/textio.hpp"
#include "beamtrace/trace.hpp"

namespace fs = std::filesystem;
using namespace beamtrace;

namespace {

// 0 ok, 2 config, 3 trace, 4 geometry, 5 overwrite refused
constexpr int kExitConfig = 2;
constexpr int kExitTrace = 3;
constexpr int kExitGeometry = 4;
constexpr int kExitOverwrite = 5;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << content;
}

std::string file_digest(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a64_hex(ss.str());
}

void guard_overwrite(const fs::path& path, bool force) {
    if (!force && fs::exists(path)) {
        throw OverwriteRefused(path.string() + " exists; pass --force to overwrite");
    }
}

struct RunArgs {
    std::string config_path;
    std::string trace_path;
    std::string out_dir;
    std::int64_t resample_ms = 0;
};

MovementTrace load_input_trace(const RunArgs& args) {
    MovementTrace trace = load_trace(args.trace_path);
    if (args.resample_ms > 0) {
        trace = resample(trace, args.resample_ms);
    }
    return trace;
}

int cmd_run(const RunArgs& args) {
    const auto t_start = std::chrono::steady_clock::now();
    const ScenarioConfig cfg =
        args.config_path.empty() ? ScenarioConfig{} : load_config(args.config_path);
    const MovementTrace trace = load_input_trace(args);
    const Scenario scn = Scenario::build(cfg);
    const RunResult result = scn.run(trace);

    fs::create_directories(args.out_dir);
    const fs::path out(args.out_dir);
    write_file(out / "timeseries.csv", timeseries_csv(result));
    write_file(out / "metrics.json", metrics_json_text(result.metrics, "timeseries.csv"));
    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t_start)
                             .count();
    write_file(out / "manifest.json",
               manifest_json_text(cfg, args.trace_path, file_digest(args.trace_path),
                                  trace.samples.size(), {"timeseries.csv", "metrics.json"},
                                  wall_ms));
    return 0;
}

struct SweepRow {
    int mode_order = 0;
    double sep_deg = 0.0;
    RunMetrics metrics;
    std::string mode_name;
};

int cmd_sweep(const RunArgs& args, const std::string& param, const std::string& values_spec,
              const std::string& modes_spec) {
    const auto t_start = std::chrono::steady_clock::now();
    if (param != "sep_deg") {
        throw ConfigError("unsupported sweep parameter '" + param + "' (only sep_deg)");
    }
    const ScenarioConfig base =
        args.config_path.empty() ? ScenarioConfig{} : load_config(args.config_path);
    const std::vector<double> values = parse_value_list(values_spec);

    std::vector<ReceptionMode> modes;
    {
        std::istringstream ss(modes_spec);
        std::string part;
        while (std::getline(ss, part, ',')) {
            modes.push_back(reception_mode_from_string(part));
        }
        if (modes.empty()) {
            throw ConfigError("empty mode list");
        }
    }

    const MovementTrace trace = load_input_trace(args);

    struct Job {
        int mode_order;
        std::string mode_name;
        double sep_deg;
        ScenarioConfig cfg;
    };
    std::vector<Job> jobs;
    for (ReceptionMode mode : modes) {
        ScenarioConfig cfg = base;
        cfg.mode = mode;
        if (mode == ReceptionMode::SingleBeamSteered) {
            // The single-beam baseline has one serving AP dead ahead; the
            // separation angle does not apply, so it contributes one row.
            cfg.ap_count = 1;
            cfg.power_coefficients.clear();
            jobs.push_back({1, to_string(mode), 0.0, cfg});
            continue;
        }
        const int order = mode == ReceptionMode::QuasiOmniFixed ? 0 : 2;
        for (double v : values) {
            cfg.separation_deg = v;
            jobs.push_back({order, to_string(mode), v, cfg});
        }
    }

    // Scenario geometry errors must surface before the async fan-out so the
    // exit code is deterministic.
    std::vector<Scenario> scenarios;
    scenarios.reserve(jobs.size());
    for (const Job& job : jobs) {
        scenarios.push_back(Scenario::build(job.cfg));
    }

    std::vector<std::future<RunMetrics>> futures;
    futures.reserve(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        futures.push_back(std::async(std::launch::async, [&scenarios, &trace, i] {
            return scenarios[i].run(trace).metrics;
        }));
    }
    std::vector<SweepRow> rows;
    rows.reserve(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        rows.push_back({jobs[i].mode_order, jobs[i].sep_deg, futures[i].get(),
                        jobs[i].mode_name});
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return a.mode_order != b.mode_order ? a.mode_order < b.mode_order
                                            : a.sep_deg < b.sep_deg;
    });

    std::ostringstream csv;
    csv << "mode,sep_deg,outage_rate,rx_mean_dbm,rx_median_dbm,rx_p5_dbm,rx_p95_dbm\n";
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    for (const SweepRow& row : rows) {
        const RxStats stats = row.metrics.rx_level_dbm.value_or(
            RxStats{kNegInf, kNegInf, kNegInf, kNegInf, kNegInf, kNegInf});
        csv << row.mode_name << ',' << format_double(row.sep_deg) << ','
            << format_double(row.metrics.outage_rate) << ',' << format_double(stats.mean) << ','
            << format_double(stats.median) << ',' << format_double(stats.p5) << ','
            << format_double(stats.p95) << '\n';
    }

    fs::create_directories(args.out_dir);
    const fs::path out(args.out_dir);
    write_file(out / "sweep.csv", csv.str());
    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t_start)
                             .count();
    write_file(out / "manifest.json",
               manifest_json_text(base, args.trace_path, file_digest(args.trace_path),
                                  trace.samples.size(), {"sweep.csv"}, wall_ms));
    return 0;
}

int cmd_gainmap(const std::string& array_spec, const std::string& beams_spec,
                bool separation_map, const std::string& grid_spec,
                const std::string& sep_grid_spec, const std::string& normalization, bool as_db,
                const std::string& out_path, bool force) {
    const ArrayGeometry geo = parse_array_spec(array_spec);
    const NormalizationMode norm = normalization_from_string(normalization);
    guard_overwrite(out_path, force);

    std::string csv;
    if (separation_map) {
        const std::vector<double> theta1 = parse_grid_spec(grid_spec);
        const std::vector<double> dtheta = parse_grid_spec(sep_grid_spec);
        std::vector<std::vector<double>> cells(theta1.size(),
                                               std::vector<double>(dtheta.size(), 0.0));
        for (std::size_t i = 0; i < theta1.size(); ++i) {
            for (std::size_t j = 0; j < dtheta.size(); ++j) {
                const std::vector<BeamSpec> beams{{theta1[i], 0.0, 0.5},
                                                  {theta1[i] - dtheta[j], 0.0, 0.5}};
                const ComplexVector w = multi_beam_weights(geo, beams, norm);
                cells[i][j] = gain(w, geo, theta1[i], 0.0);
            }
        }
        csv = matrix_csv("theta1_deg", theta1, dtheta, cells, as_db);
    } else {
        const std::vector<BeamSpec> beams = parse_beams_spec(beams_spec);
        const ComplexVector w = multi_beam_weights(geo, beams, norm);
        const std::vector<double> grid = parse_grid_spec(grid_spec);
        csv = matrix_csv("theta_deg", grid, grid, gain_map(w, geo, grid, grid), as_db);
    }
    write_file(out_path, csv);
    return 0;
}

int cmd_synth(const std::string& kind, const SynthParams& params, const std::string& out_path,
              bool force) {
    SynthKind k;
    if (kind == "yaw_sweep") {
        k = SynthKind::YawSweep;
    } else if (kind == "static") {
        k = SynthKind::Static;
    } else if (kind == "random_walk") {
        k = SynthKind::RandomWalk;
    } else {
        throw BadParams("unknown trace kind '" + kind +
                        "' (expected yaw_sweep|static|random_walk)");
    }
    guard_overwrite(out_path, force);
    save_trace(synthesize_trace(k, params), out_path);
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Trace-driven mmWave multi-AP beam reception simulator"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run one scenario over a movement trace");
    run->add_option("--config", run_args.config_path, "Scenario config JSON ({} = defaults)");
    run->add_option("--trace", run_args.trace_path, "Movement trace CSV")->required();
    run->add_option("--out", run_args.out_dir, "Output directory")->required();
    run->add_option("--resample-ms", run_args.resample_ms,
                    "Decimate the trace to this period before running");

    RunArgs sweep_args;
    std::string param = "sep_deg";
    std::string values = "20,60,100,140";
    std::string modes = "quasi,single,dual";
    auto* sweep = app.add_subcommand("sweep", "Sweep AP separation across reception modes");
    sweep->add_option("--config", sweep_args.config_path, "Scenario config JSON");
    sweep->add_option("--trace", sweep_args.trace_path, "Movement trace CSV")->required();
    sweep->add_option("--out", sweep_args.out_dir, "Output directory")->required();
    sweep->add_option("--resample-ms", sweep_args.resample_ms,
                      "Decimate the trace to this period before running");
    sweep->add_option("--param", param, "Swept parameter (sep_deg)");
    sweep->add_option("--values", values, "Comma-separated sweep values");
    sweep->add_option("--modes", modes, "Comma-separated modes (quasi,single,dual)");

    std::string array_spec = "8x8";
    std::string beams_spec = "0,0,1";
    std::string grid_spec = "-90:90:1";
    std::string sep_grid_spec = "0:180:2";
    std::string normalization = "paper";
    std::string map_out;
    bool separation_map = false;
    bool as_db = false;
    bool map_force = false;
    auto* gainmap = app.add_subcommand("gainmap", "Export a beamforming gain map CSV");
    gainmap->add_option("--array", array_spec, "Array size MxN");
    gainmap->add_option("--beams", beams_spec, "Beams as theta,phi,eta;... (pattern map)");
    gainmap->add_flag("--separation-map", separation_map,
                      "Map gain at beam 1 over (theta1, dtheta), equal split, phi = 0");
    gainmap->add_option("--grid", grid_spec, "theta grid start:stop:step");
    gainmap->add_option("--sep-grid", sep_grid_spec, "dtheta grid for --separation-map");
    gainmap->add_option("--normalization", normalization,
                        "paper|constant_modulus|unit_power");
    gainmap->add_flag("--db", as_db, "Emit 10*log10 gains");
    gainmap->add_option("--out", map_out, "Output CSV path")->required();
    gainmap->add_flag("--force", map_force, "Overwrite an existing output file");

    std::string kind = "static";
    double duration_s = 60.0;
    SynthParams synth_params;
    std::string synth_out;
    bool synth_force = false;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic movement trace");
    synth->add_option("--kind", kind, "yaw_sweep|static|random_walk");
    synth->add_option("--duration-s", duration_s, "Trace duration in seconds");
    synth->add_option("--period-ms", synth_params.period_ms, "Sample period in ms");
    synth->add_option("--max-yaw", synth_params.max_yaw_deg,
                      "Yaw sweep target / random-walk clamp, degrees");
    synth->add_option("--seed", synth_params.seed, "Random-walk seed");
    synth->add_option("--yaw-step-deg", synth_params.yaw_step_deg,
                      "Random-walk per-sample yaw step bound");
    synth->add_option("--translation-step-m", synth_params.translation_step_m,
                      "Random-walk per-sample translation step bound");
    synth->add_option("--out", synth_out, "Output trace CSV path")->required();
    synth->add_flag("--force", synth_force, "Overwrite an existing output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (run->parsed()) {
            return cmd_run(run_args);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_args, param, values, modes);
        }
        if (gainmap->parsed()) {
            return cmd_gainmap(array_spec, beams_spec, separation_map, grid_spec, sep_grid_spec,
                               normalization, as_db, map_out, map_force);
        }
        if (synth->parsed()) {
            if (duration_s <= 0.0) {
                throw BadParams("duration must be positive");
            }
            synth_params.duration_ms = std::llround(duration_s * 1000.0);
            return cmd_synth(kind, synth_params, synth_out, synth_force);
        }
    } catch (const TraceError& e) {
        std::cerr << "beamtrace: trace error: " << e.what() << '\n';
        return kExitTrace;
    } catch (const GeometryInfeasible& e) {
        std::cerr << "beamtrace: infeasible geometry: " << e.what() << '\n';
        return kExitGeometry;
    } catch (const OverwriteRefused& e) {
        std::cerr << "beamtrace: " << e.what() << '\n';
        return kExitOverwrite;
    } catch (const std::exception& e) {
        std::cerr << "beamtrace: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
