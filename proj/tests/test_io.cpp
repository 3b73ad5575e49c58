// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>

#include <doctest.h>

#include "beamtrace/errors.hpp"
#include "beamtrace/io.hpp"
#include "beamtrace/textio.hpp"
#include "test_util.hpp"

using namespace beamtrace;
using nlohmann::json;

TEST_CASE("format_double") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_double(64.0) == "64");

    testutil::Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        const double v = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.uniform(-12, 12));
        double back = 0.0;
        REQUIRE(parse_double(format_double(v), back));
        CHECK(back == v);
    }
    double neg_inf = 0.0;
    REQUIRE(parse_double("-inf", neg_inf));
    CHECK(std::isinf(neg_inf));

    double junk = 0.0;
    CHECK(!parse_double("1.5x", junk));
    CHECK(!parse_double("", junk));
}

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("config defaults and round trip") {
    const ScenarioConfig def = config_from_json(json::object());
    CHECK(def.radio.carrier_hz == 28e9);
    CHECK(def.radio.bandwidth_hz == 200e6);
    CHECK(def.radio.tx_power_dbm_per_ap == 10.0);
    CHECK(def.hmd_array.m_count == 8);
    CHECK(def.quasi_omni_array.m_count == 2);
    CHECK(def.quasi_omni_array.n_count == 4);
    CHECK(def.hmd_ap_distance_m == 10.0);
    CHECK(def.ap_height_m == 4.0);
    CHECK(def.hmd_height_m == 1.5);
    CHECK(def.mode == ReceptionMode::DualBeamSteered);
    CHECK(!def.radio.snr_outage_threshold_db.has_value());

    ScenarioConfig cfg;
    cfg.separation_deg = 60.0;
    cfg.ap_count = 3;
    cfg.mode = ReceptionMode::QuasiOmniFixed;
    cfg.normalization = NormalizationMode::UnitPower;
    cfg.power_coefficients = {0.5, 0.25, 0.25};
    cfg.radio.snr_outage_threshold_db = 5.0;
    const json j = config_to_json(cfg);
    const ScenarioConfig back = config_from_json(j);
    CHECK(config_to_json(back).dump() == j.dump());
    CHECK(back.separation_deg == 60.0);
    CHECK(back.mode == ReceptionMode::QuasiOmniFixed);
    CHECK(back.normalization == NormalizationMode::UnitPower);
    CHECK(back.power_coefficients.size() == 3);
    CHECK(back.radio.snr_outage_threshold_db == 5.0);
}

TEST_CASE("config rejects unknown keys and bad values") {
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"separation": 20})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"radio": {"carriers_hz": 1}})")),
                    ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"ap_count": 0})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"hmd_ap_distance_m": -1})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"separation_deg": 181})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"radio": {"fov_half_angle_deg": 190}})")),
                    ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"mode": "triple"})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"hmd_array": {"m": 0}})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse("[1,2]")), ConfigError);
}

TEST_CASE("mode and normalization strings") {
    for (auto m : {ReceptionMode::QuasiOmniFixed, ReceptionMode::SingleBeamSteered,
                   ReceptionMode::DualBeamSteered}) {
        CHECK(reception_mode_from_string(to_string(m)) == m);
    }
    for (auto n : {NormalizationMode::PaperVectorNorm,
                   NormalizationMode::ElementwiseConstantModulus,
                   NormalizationMode::UnitPower}) {
        CHECK(normalization_from_string(to_string(n)) == n);
    }
    CHECK_THROWS_AS(reception_mode_from_string("omni"), ConfigError);
    CHECK_THROWS_AS(normalization_from_string(""), ConfigError);
}

TEST_CASE("timeseries_csv header matches the documented two-AP schema") {
    const Scenario scn = Scenario::build(ScenarioConfig{});
    SynthParams params;
    params.duration_ms = 640;
    const RunResult res = scn.run(synthesize_trace(SynthKind::Static, params));
    const std::string csv = timeseries_csv(res);
    const std::string header = csv.substr(0, csv.find('\n'));
    CHECK(header ==
          "t_ms,theta_mis_1,phi_mis_1,theta_mis_2,phi_mis_2,"
          "aoa_az_1,aoa_el_1,aoa_az_2,aoa_el_2,in_fov_1,in_fov_2,"
          "g_tx_1_db,g_tx_2_db,g_rx_1_db,g_rx_2_db,rx_dbm,snr_db,outage");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 samples
}

TEST_CASE("outage rows carry the -inf token") {
    ScenarioConfig cfg;
    const Scenario scn = Scenario::build(cfg);
    MovementTrace trace;
    trace.nominal_period_ms = 320;
    MotionSample a;
    MotionSample b;
    b.t_ms = 320;
    b.euler.yaw_deg = 180.0;
    trace.samples = {a, b};
    const std::string csv = timeseries_csv(scn.run(trace));
    CHECK(csv.find(",-inf,") != std::string::npos);
    const std::size_t last_line = csv.rfind('\n', csv.size() - 2);
    CHECK(csv.substr(csv.size() - 3) == ",1\n");  // outage flag set
    CHECK(csv.substr(last_line + 1, 3) == "320");
}

TEST_CASE("metrics json reflects the run") {
    const Scenario scn = Scenario::build(ScenarioConfig{});
    SynthParams params;
    params.duration_ms = 3200;
    const RunResult res = scn.run(synthesize_trace(SynthKind::Static, params));
    const json j = json::parse(metrics_json_text(res.metrics, "timeseries.csv"));
    CHECK(j["outage_rate"] == 0.0);
    CHECK(j["samples_total"] == res.metrics.samples_total);
    CHECK(j["samples_outage"] == 0);
    CHECK(j["timeseries"] == "timeseries.csv");
    CHECK(j["rx_level_dbm"]["mean"].get<double>() == res.metrics.rx_level_dbm->mean);

    RunMetrics all_out;
    all_out.samples_total = 3;
    all_out.samples_outage = 3;
    all_out.outage_rate = 1.0;
    const json j2 = json::parse(metrics_json_text(all_out, "timeseries.csv"));
    CHECK(j2["rx_level_dbm"].is_null());
}

TEST_CASE("manifest lists outputs and digests the trace") {
    const std::string text = manifest_json_text(ScenarioConfig{}, "walk.csv", "abc123", 188,
                                                {"timeseries.csv", "metrics.json"}, 17);
    const json j = json::parse(text);
    CHECK(j["tool"] == "beamtrace");
    CHECK(j["version"] == kToolVersion);
    CHECK(j["trace"]["fnv1a64"] == "abc123");
    CHECK(j["trace"]["samples"] == 188);
    CHECK(j["outputs"].size() == 2);
    CHECK(j["wall_ms"] == 17);
    CHECK(config_to_json(config_from_json(j["config"])).dump() == j["config"].dump());
}

TEST_CASE("matrix_csv layout") {
    const std::string csv =
        matrix_csv("theta_deg", {-1.0, 1.0}, {0.0, 2.0}, {{1.0, 2.0}, {4.0, 0.0}}, false);
    CHECK(csv == "theta_deg,0,2\n-1,1,2\n1,4,0\n");
    const std::string db =
        matrix_csv("theta_deg", {0.0}, {0.0, 1.0}, {{100.0, 0.0}}, true);
    CHECK(db == "theta_deg,0,1\n0,20,-inf\n");
}

TEST_CASE("cli spec parsers") {
    const ArrayGeometry geo = parse_array_spec("2x4");
    CHECK(geo.m_count == 2);
    CHECK(geo.n_count == 4);
    CHECK_THROWS_AS(parse_array_spec("8"), ConfigError);
    CHECK_THROWS_AS(parse_array_spec("0x4"), ConfigError);
    CHECK_THROWS_AS(parse_array_spec("axb"), ConfigError);

    const auto beams = parse_beams_spec("30,0,0.5;-30,0,0.5");
    REQUIRE(beams.size() == 2);
    CHECK(beams[0].theta_deg == 30.0);
    CHECK(beams[1].theta_deg == -30.0);
    CHECK(beams[1].eta == 0.5);
    CHECK_THROWS_AS(parse_beams_spec("30,0"), ConfigError);
    CHECK_THROWS_AS(parse_beams_spec("30,0,0.5,9"), ConfigError);

    const auto grid = parse_grid_spec("-90:90:1");
    REQUIRE(grid.size() == 181);
    CHECK(grid.front() == -90.0);
    CHECK(grid.back() == doctest::Approx(90.0).epsilon(1e-12));
    const auto coarse = parse_grid_spec("0:180:2");
    CHECK(coarse.size() == 91);
    CHECK_THROWS_AS(parse_grid_spec("0:10"), ConfigError);
    CHECK_THROWS_AS(parse_grid_spec("10:0:1"), ConfigError);
    CHECK_THROWS_AS(parse_grid_spec("0:10:0"), ConfigError);

    const auto vals = parse_value_list("20,60,100,140");
    CHECK(vals == std::vector<double>{20, 60, 100, 140});
    CHECK_THROWS_AS(parse_value_list("20,,60"), ConfigError);
}
