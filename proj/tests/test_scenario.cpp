// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "beamtrace/angles.hpp"
#include "beamtrace/errors.hpp"
#include "beamtrace/scenario.hpp"
#include "test_util.hpp"

using namespace beamtrace;

namespace {

// Closed-form budget recomputation from the logged per-AP quantities.
double budget_oracle_dbm(const SampleResult& s, const RadioConfig& radio) {
    const double p_mw = std::pow(10.0, radio.tx_power_dbm_per_ap / 10.0);
    double amp = 0.0;
    for (const PerApSample& ap : s.aps) {
        if (!ap.serving || !ap.in_fov) {
            continue;
        }
        const double h = 299792458.0 /
                         (4.0 * std::numbers::pi * radio.carrier_hz * ap.distance_m) *
                         std::sqrt(ap.g_tx * ap.g_rx);
        amp += std::sqrt(p_mw) * h;
    }
    return 20.0 * std::log10(amp);
}

MotionSample yaw_only(double yaw_deg) {
    MotionSample s;
    s.euler.yaw_deg = yaw_deg;
    return s;
}

}  // namespace

TEST_CASE("build_scenario geometry") {
    SUBCASE("coincident APs at zero separation") {
        ScenarioConfig cfg;
        cfg.separation_deg = 0.0;
        const Scenario scn = Scenario::build(cfg);
        REQUIRE(scn.ap_positions().size() == 2);
        CHECK(scn.ap_positions()[0].x == doctest::Approx(scn.ap_positions()[1].x).epsilon(1e-12));
        CHECK(scn.ap_positions()[0].y == doctest::Approx(scn.ap_positions()[1].y).epsilon(1e-12));
        CHECK(scn.ap_positions()[0].z == 4.0);

        const double phi0 = -rad2deg(std::asin(2.5 / 10.0));
        for (const OrientationVector& q : scn.initial_orientations()) {
            CHECK(q.r == doctest::Approx(10.0).epsilon(1e-12));
            CHECK(q.theta_deg == doctest::Approx(0.0).epsilon(1e-9));
            CHECK(q.phi_deg == doctest::Approx(phi0).epsilon(1e-9));
        }

        const SampleResult at_rest = Scenario::build(cfg).step({});
        CHECK(at_rest.aps[0].aoa_az_deg == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(at_rest.aps[0].aoa_el_deg == doctest::Approx(phi0).epsilon(1e-9));
    }

    SUBCASE("separation shows up in the initial body frame") {
        ScenarioConfig cfg;
        cfg.separation_deg = 140.0;
        const Scenario scn = Scenario::build(cfg);
        const double t1 = scn.initial_orientations()[0].theta_deg;
        const double t2 = scn.initial_orientations()[1].theta_deg;
        CHECK(t1 == doctest::Approx(70.0).epsilon(1e-9));
        CHECK(t2 == doctest::Approx(-70.0).epsilon(1e-9));
        CHECK(std::abs(t1 - t2) == doctest::Approx(140.0).epsilon(1e-9));
    }

    SUBCASE("single-AP baseline sits dead ahead") {
        ScenarioConfig cfg;
        cfg.ap_count = 1;
        cfg.mode = ReceptionMode::SingleBeamSteered;
        cfg.separation_deg = 140.0;  // irrelevant for one AP
        const Scenario scn = Scenario::build(cfg);
        REQUIRE(scn.ap_positions().size() == 1);
        CHECK(scn.initial_orientations()[0].theta_deg == doctest::Approx(0.0).epsilon(1e-9));
    }

    SUBCASE("distance shorter than the height difference is infeasible") {
        ScenarioConfig cfg;
        cfg.hmd_ap_distance_m = 2.0;
        CHECK_THROWS_AS(Scenario::build(cfg), GeometryInfeasible);
    }

    SUBCASE("APs must stay inside the room") {
        ScenarioConfig cfg;
        cfg.room_x_m = 4.0;
        cfg.room_y_m = 4.0;
        CHECK_THROWS_AS(Scenario::build(cfg), GeometryInfeasible);
    }

    SUBCASE("power coefficient count must match the serving set") {
        ScenarioConfig cfg;
        cfg.power_coefficients = {0.5, 0.25, 0.25};
        CHECK_THROWS_AS(Scenario::build(cfg), BadPowerCoefficients);
    }
}

TEST_CASE("step") {
    ScenarioConfig cfg;  // dual beam, 20 degrees, defaults

    SUBCASE("zero motion reproduces the closed-form budget") {
        const Scenario scn = Scenario::build(cfg);
        const SampleResult s = scn.step({});
        CHECK(!s.outage);
        CHECK(s.rx_power_dbm == doctest::Approx(budget_oracle_dbm(s, cfg.radio)).epsilon(1e-12));
        CHECK(s.rx_power_dbm == doctest::Approx(-33.927172744).epsilon(1e-9));
        CHECK(s.aps[0].g_tx == doctest::Approx(64.0).epsilon(1e-9));
        CHECK(s.aps[0].g_rx == doctest::Approx(21.784).epsilon(1e-3));
        CHECK(s.aps[0].in_fov);
        CHECK(s.aps[1].in_fov);
    }

    SUBCASE("turning fully around blacks out both APs") {
        const Scenario scn = Scenario::build(cfg);
        const SampleResult s = scn.step(yaw_only(180.0));
        CHECK(s.outage);
        CHECK(std::isinf(s.rx_power_dbm));
        CHECK(!s.aps[0].in_fov);
        CHECK(!s.aps[1].in_fov);
    }

    SUBCASE("wide separation keeps one AP visible at yaw 100") {
        cfg.separation_deg = 140.0;
        const Scenario scn = Scenario::build(cfg);
        const SampleResult s = scn.step(yaw_only(100.0));
        CHECK(s.aps[0].aoa_az_deg == doctest::Approx(-30.0).epsilon(1e-9));
        CHECK(s.aps[1].aoa_az_deg == doctest::Approx(-170.0).epsilon(1e-9));
        CHECK(s.aps[0].in_fov);
        CHECK(!s.aps[1].in_fov);
        CHECK(!s.outage);
    }

    SUBCASE("misalignment report follows the linear model") {
        const Scenario scn = Scenario::build(cfg);
        const SampleResult s = scn.step(yaw_only(30.0));
        CHECK(s.aps[0].theta_mis_deg == doctest::Approx(-30.0).epsilon(1e-9));
        CHECK(s.aps[0].phi_mis_deg == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(s.aps[0].r_dis_m == doctest::Approx(0.0).epsilon(1e-12));
    }

    SUBCASE("translation closes in on the APs") {
        const Scenario scn = Scenario::build(cfg);
        MotionSample s;
        s.translation = {-1.0, 0.0, 0.0};  // toward the APs
        const SampleResult out = scn.step(s);
        CHECK(out.aps[0].distance_m < 10.0);
        CHECK(out.aps[0].r_dis_m > 0.0);
    }
}

TEST_CASE("run metrics") {
    ScenarioConfig cfg;

    SUBCASE("static trace never drops and holds a constant level") {
        const Scenario scn = Scenario::build(cfg);
        const RunResult res = scn.run(synthesize_trace(SynthKind::Static, {}));
        CHECK(res.metrics.outage_rate == 0.0);
        REQUIRE(res.metrics.rx_level_dbm.has_value());
        for (const SampleResult& s : res.samples) {
            CHECK(std::abs(s.rx_power_dbm - res.samples.front().rx_power_dbm) <= 1e-12);
        }
        // constant series collapses the order statistics
        CHECK(res.metrics.rx_level_dbm->p5 == res.metrics.rx_level_dbm->p95);
        CHECK(res.metrics.rx_level_dbm->p5 ==
              doctest::Approx(res.metrics.rx_level_dbm->mean).epsilon(1e-12));
    }

    SUBCASE("full yaw sweep puts the single-AP baseline out half the time") {
        cfg.ap_count = 1;
        cfg.mode = ReceptionMode::SingleBeamSteered;
        const Scenario scn = Scenario::build(cfg);
        const RunResult res = scn.run(synthesize_trace(SynthKind::YawSweep, {}));
        CHECK(res.metrics.samples_total == 188);
        CHECK(res.metrics.samples_outage == 94);
        CHECK(res.metrics.outage_rate == 0.5);
    }

    SUBCASE("dual-beam outage shrinks with wider separation") {
        const MovementTrace sweep = synthesize_trace(SynthKind::YawSweep, {});
        cfg.separation_deg = 20.0;
        const double narrow = Scenario::build(cfg).run(sweep).metrics.outage_rate;
        cfg.separation_deg = 140.0;
        const double wide = Scenario::build(cfg).run(sweep).metrics.outage_rate;
        CHECK(wide < narrow);
    }
}

TEST_CASE("mode relationships") {
    const MovementTrace sweep = synthesize_trace(SynthKind::YawSweep, {});
    SynthParams walk_params;
    walk_params.max_yaw_deg = 30.0;
    walk_params.seed = 42;
    const MovementTrace walk = synthesize_trace(SynthKind::RandomWalk, walk_params);

    SUBCASE("dual-beam outage dominates single-beam with the same AP-1") {
        ScenarioConfig cfg;
        cfg.separation_deg = 60.0;
        cfg.mode = ReceptionMode::SingleBeamSteered;
        const RunResult single = Scenario::build(cfg).run(sweep);
        cfg.mode = ReceptionMode::DualBeamSteered;
        const RunResult dual = Scenario::build(cfg).run(sweep);
        REQUIRE(single.samples.size() == dual.samples.size());
        for (std::size_t i = 0; i < dual.samples.size(); ++i) {
            if (dual.samples[i].outage) {
                CHECK(single.samples[i].outage);
            }
        }
        CHECK(dual.metrics.outage_rate <= single.metrics.outage_rate);
    }

    SUBCASE("quasi-omni outage is identical to dual-beam outage") {
        ScenarioConfig cfg;
        cfg.mode = ReceptionMode::QuasiOmniFixed;
        const RunResult quasi = Scenario::build(cfg).run(sweep);
        cfg.mode = ReceptionMode::DualBeamSteered;
        const RunResult dual = Scenario::build(cfg).run(sweep);
        REQUIRE(quasi.samples.size() == dual.samples.size());
        for (std::size_t i = 0; i < dual.samples.size(); ++i) {
            CHECK(quasi.samples[i].outage == dual.samples[i].outage);
        }
        CHECK(quasi.metrics.outage_rate == dual.metrics.outage_rate);
    }

    SUBCASE("steered 8x8 reception beats the fixed 2x4 every aligned sample") {
        ScenarioConfig cfg;
        cfg.mode = ReceptionMode::QuasiOmniFixed;
        const RunResult quasi = Scenario::build(cfg).run(walk);
        cfg.mode = ReceptionMode::DualBeamSteered;
        const RunResult dual = Scenario::build(cfg).run(walk);
        for (std::size_t i = 0; i < dual.samples.size(); ++i) {
            if (!dual.samples[i].outage && !quasi.samples[i].outage) {
                CHECK(quasi.samples[i].rx_power_dbm < dual.samples[i].rx_power_dbm);
            }
        }
    }

    SUBCASE("budget identity holds on every non-outage sample") {
        ScenarioConfig cfg;
        const RunResult res = Scenario::build(cfg).run(walk);
        for (const SampleResult& s : res.samples) {
            if (!s.outage) {
                CHECK(std::abs(s.rx_power_dbm - budget_oracle_dbm(s, cfg.radio)) < 1e-9);
            }
        }
    }

    SUBCASE("runs are deterministic") {
        ScenarioConfig cfg;
        const RunResult a = Scenario::build(cfg).run(walk);
        const RunResult b = Scenario::build(cfg).run(walk);
        REQUIRE(a.samples.size() == b.samples.size());
        for (std::size_t i = 0; i < a.samples.size(); ++i) {
            CHECK(a.samples[i].rx_power_dbm == b.samples[i].rx_power_dbm);
            CHECK(a.samples[i].aps[0].g_rx == b.samples[i].aps[0].g_rx);
        }
    }
}

TEST_CASE("outage_rate and rx_level_stats") {
    CHECK_THROWS_AS(outage_rate({}), EmptyResults);

    std::vector<SampleResult> all_out(4);
    for (SampleResult& s : all_out) {
        s.outage = true;
    }
    CHECK(outage_rate(all_out) == 1.0);
    CHECK_THROWS_AS(rx_level_stats(all_out), AllOutage);

    SampleResult lone;
    lone.rx_power_dbm = -40.0;
    const RxStats one = rx_level_stats({lone});
    CHECK(one.min == -40.0);
    CHECK(one.max == -40.0);
    CHECK(one.mean == -40.0);
    CHECK(one.p5 == -40.0);
    CHECK(one.p95 == -40.0);
    CHECK(one.median == -40.0);

    std::vector<SampleResult> ten;
    for (int i = 1; i <= 10; ++i) {
        SampleResult s;
        s.rx_power_dbm = static_cast<double>(i);
        ten.push_back(s);
    }
    const RxStats stats = rx_level_stats(ten);
    // nearest-rank: ceil(p/100 * 10)
    CHECK(stats.p5 == 1.0);
    CHECK(stats.median == 5.0);
    CHECK(stats.p95 == 10.0);
    CHECK(stats.mean == doctest::Approx(5.5).epsilon(1e-12));
    CHECK(outage_rate(ten) == 0.0);

    std::vector<SampleResult> mixed = ten;
    SampleResult out;
    out.outage = true;
    out.rx_power_dbm = -std::numeric_limits<double>::infinity();
    mixed.push_back(out);
    mixed.push_back(out);
    CHECK(outage_rate(mixed) == doctest::Approx(2.0 / 12.0).epsilon(1e-15));
    CHECK(rx_level_stats(mixed).median == 5.0);  // outage samples excluded
}
