// SPDX-License-Identifier: Apache-2.0

#include "beamtrace/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "beamtrace/angles.hpp"
#include "beamtrace/errors.hpp"

namespace beamtrace {

namespace {

double nearest_rank(const std::vector<double>& sorted, double percentile) {
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(percentile / 100.0 * n));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

}  // namespace

Scenario::Scenario(ScenarioConfig cfg) : cfg_(std::move(cfg)) {}

Scenario Scenario::build(const ScenarioConfig& cfg) {
    if (cfg.ap_count < 1) {
        throw GeometryInfeasible("ap_count must be at least 1");
    }
    const double dh = cfg.ap_height_m - cfg.hmd_height_m;
    const double rho_sq = cfg.hmd_ap_distance_m * cfg.hmd_ap_distance_m - dh * dh;
    if (rho_sq <= 0.0) {
        throw GeometryInfeasible("HMD-AP distance " + std::to_string(cfg.hmd_ap_distance_m) +
                                 " m does not reach across the height difference " +
                                 std::to_string(dh) + " m");
    }
    const double rho = std::sqrt(rho_sq);

    Scenario scn(cfg);
    scn.hmd0_ = {cfg.room_x_m / 2.0, cfg.room_y_m / 2.0, cfg.hmd_height_m};
    const int count = cfg.ap_count;
    for (int l = 0; l < count; ++l) {
        const double az = deg2rad(((count - 1) / 2.0 - l) * cfg.separation_deg);
        // Initial facing is azimuth 0 of the (hmd - ap) difference vector.
        const Position3 ap{scn.hmd0_.x - rho * std::cos(az), scn.hmd0_.y - rho * std::sin(az),
                           cfg.ap_height_m};
        if (ap.x < 0.0 || ap.x > cfg.room_x_m || ap.y < 0.0 || ap.y > cfg.room_y_m) {
            throw GeometryInfeasible("AP " + std::to_string(l + 1) + " falls outside the " +
                                     std::to_string(cfg.room_x_m) + " x " +
                                     std::to_string(cfg.room_y_m) + " m room");
        }
        scn.aps_.push_back(ap);
        scn.q0_.push_back(orientation_from_positions(scn.hmd0_, ap));
    }

    if (cfg.mode == ReceptionMode::SingleBeamSteered) {
        scn.serving_ = {0};
    } else {
        scn.serving_.resize(static_cast<std::size_t>(count));
        for (int l = 0; l < count; ++l) {
            scn.serving_[static_cast<std::size_t>(l)] = l;
        }
    }

    const std::size_t n_serving = scn.serving_.size();
    if (cfg.power_coefficients.empty()) {
        scn.eta_.assign(n_serving, 1.0 / static_cast<double>(n_serving));
    } else if (cfg.power_coefficients.size() == n_serving) {
        scn.eta_ = cfg.power_coefficients;
        double sum = 0.0;
        for (double eta : scn.eta_) {
            sum += eta;
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            throw BadPowerCoefficients("power coefficients sum to " + std::to_string(sum) +
                                       ", expected 1");
        }
    } else {
        throw BadPowerCoefficients("got " + std::to_string(cfg.power_coefficients.size()) +
                                   " power coefficients for " + std::to_string(n_serving) +
                                   " serving APs");
    }

    if (cfg.mode == ReceptionMode::QuasiOmniFixed) {
        scn.quasi_weights_ =
            multi_beam_weights(cfg.quasi_omni_array, {{0.0, 0.0, 1.0}}, cfg.normalization);
    }
    return scn;
}

SampleResult Scenario::step(const MotionSample& sample) const {
    const std::size_t ap_count = aps_.size();
    SampleResult out;
    out.t_ms = sample.t_ms;
    out.aps.resize(ap_count);

    const Position3 hmd = hmd0_ + sample.translation;
    const RotationMatrix rot = rotation_matrix(sample.euler);

    for (std::size_t l = 0; l < ap_count; ++l) {
        PerApSample& ap = out.aps[l];

        // Departure direction in the room frame; the AP re-steers every step,
        // so its gain is evaluated at the exact tracking direction.
        const OrientationVector aod = orientation_from_positions(hmd, aps_[l]);
        ap.aod_az_deg = aod.theta_deg;
        ap.aod_el_deg = aod.phi_deg;
        ap.distance_m = aod.r;
        const ComplexVector tx_weights =
            multi_beam_weights(cfg_.ap_array, {{aod.theta_deg, aod.phi_deg, 1.0}},
                               NormalizationMode::UnitPower);
        ap.g_tx = gain(tx_weights, cfg_.ap_array, aod.theta_deg, aod.phi_deg);

        const OrientationVector aoa = body_frame_aoa(hmd, sample.euler, aps_[l]);
        ap.aoa_az_deg = aoa.theta_deg;
        ap.aoa_el_deg = aoa.phi_deg;
        ap.in_fov = in_field_of_view(aoa.theta_deg, cfg_.radio);

        // Reported misalignment uses the linear combination model against the
        // initial orientation; the channel itself uses the exact composition.
        const OrientationVector q_trn =
            apply_translation(hmd0_, sample.translation, aps_[l]);
        const OrientationVector q_rot = apply_rotation(q0_[l], rot);
        const MisalignmentVector mis = misalignment(q0_[l], q_trn, q_rot);
        ap.theta_mis_deg = mis.theta_mis_deg;
        ap.phi_mis_deg = mis.phi_mis_deg;
        ap.r_dis_m = mis.r_dis_m;
    }

    // HMD receive weights; steered beams re-point every step regardless of FoV.
    ComplexVector rx_weights;
    const ArrayGeometry* rx_geo = nullptr;
    switch (cfg_.mode) {
        case ReceptionMode::QuasiOmniFixed:
            rx_weights = quasi_weights_;
            rx_geo = &cfg_.quasi_omni_array;
            break;
        case ReceptionMode::SingleBeamSteered:
            rx_weights = multi_beam_weights(
                cfg_.hmd_array, {{out.aps[0].aoa_az_deg, out.aps[0].aoa_el_deg, 1.0}},
                cfg_.normalization);
            rx_geo = &cfg_.hmd_array;
            break;
        case ReceptionMode::DualBeamSteered: {
            std::vector<BeamSpec> beams;
            beams.reserve(serving_.size());
            for (std::size_t i = 0; i < serving_.size(); ++i) {
                const PerApSample& ap = out.aps[static_cast<std::size_t>(serving_[i])];
                beams.push_back({ap.aoa_az_deg, ap.aoa_el_deg, eta_[i]});
            }
            rx_weights = multi_beam_weights(cfg_.hmd_array, beams, cfg_.normalization);
            rx_geo = &cfg_.hmd_array;
            break;
        }
    }

    std::vector<LinkSample> links;
    links.reserve(serving_.size());
    for (int idx : serving_) {
        PerApSample& ap = out.aps[static_cast<std::size_t>(idx)];
        ap.serving = true;
        ap.g_rx = gain(rx_weights, *rx_geo, ap.aoa_az_deg, ap.aoa_el_deg);
        links.push_back({ap.distance_m, ap.g_tx, ap.g_rx, ap.in_fov});
    }

    const RxOutcome rx = coherent_rx_power(cfg_.radio, links);
    for (std::size_t i = 0; i < serving_.size(); ++i) {
        out.aps[static_cast<std::size_t>(serving_[i])].channel_mag = rx.channel_magnitudes[i];
    }
    out.rx_power_dbm = rx.rx_power_dbm;
    out.snr_db = rx.snr_db;
    out.outage = rx.outage;
    return out;
}

RunResult Scenario::run(const MovementTrace& trace) const {
    RunResult result;
    result.samples.reserve(trace.samples.size());
    for (const MotionSample& s : trace.samples) {
        result.samples.push_back(step(s));
    }
    result.metrics = compute_metrics(result.samples);
    return result;
}

double outage_rate(const std::vector<SampleResult>& results) {
    if (results.empty()) {
        throw EmptyResults();
    }
    std::size_t outages = 0;
    for (const SampleResult& s : results) {
        outages += s.outage ? 1 : 0;
    }
    return static_cast<double>(outages) / static_cast<double>(results.size());
}

RxStats rx_level_stats(const std::vector<SampleResult>& results) {
    std::vector<double> rx;
    rx.reserve(results.size());
    for (const SampleResult& s : results) {
        if (!s.outage) {
            rx.push_back(s.rx_power_dbm);
        }
    }
    if (rx.empty()) {
        throw AllOutage();
    }
    std::sort(rx.begin(), rx.end());
    RxStats stats;
    stats.min = rx.front();
    stats.max = rx.back();
    stats.p5 = nearest_rank(rx, 5.0);
    stats.median = nearest_rank(rx, 50.0);
    stats.p95 = nearest_rank(rx, 95.0);
    double sum = 0.0;
    for (double v : rx) {
        sum += v;
    }
    stats.mean = sum / static_cast<double>(rx.size());
    return stats;
}

RunMetrics compute_metrics(const std::vector<SampleResult>& results) {
    RunMetrics m;
    m.samples_total = results.size();
    for (const SampleResult& s : results) {
        m.samples_outage += s.outage ? 1 : 0;
    }
    m.outage_rate = outage_rate(results);
    if (m.samples_outage < m.samples_total) {
        m.rx_level_dbm = rx_level_stats(results);
    }
    return m;
}

}  // namespace beamtrace
