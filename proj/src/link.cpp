// SPDX-License-Identifier: Apache-2.0

#include "beamtrace/link.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "beamtrace/angles.hpp"
#include "beamtrace/errors.hpp"

namespace beamtrace {

namespace {
constexpr double kBoltzmann = 1.380649e-23;  // J/K
constexpr double kSpeedOfLight = 299792458.0;  // m/s
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

double noise_power_dbm(const RadioConfig& cfg, NoiseSide side) {
    const double f_db =
        side == NoiseSide::Hmd ? cfg.noise_figure_db_hmd : cfg.noise_figure_db_ap;
    return 10.0 * std::log10(kBoltzmann * cfg.temperature_k * cfg.bandwidth_hz * 1000.0) + f_db;
}

std::complex<double> los_channel(const RadioConfig& cfg, const LinkSample& link) {
    if (!(link.distance_m > 0.0)) {
        throw NonPositiveDistance();
    }
    if (!link.in_fov) {
        return {0.0, 0.0};
    }
    const double mag = kSpeedOfLight / (4.0 * std::numbers::pi * cfg.carrier_hz * link.distance_m) *
                       std::sqrt(link.g_tx_linear * link.g_rx_linear);
    const double phase = -2.0 * std::numbers::pi * cfg.carrier_hz * link.distance_m / kSpeedOfLight;
    return std::polar(mag, phase);
}

std::complex<double> mrt_precoder(std::complex<double> h) {
    const double mag = std::abs(h);
    if (mag == 0.0) {
        throw ZeroChannel();
    }
    return std::conj(h) / mag;
}

RxOutcome coherent_rx_power(const RadioConfig& cfg, const std::vector<LinkSample>& links) {
    if (links.empty()) {
        throw EmptyLinkSet();
    }
    RxOutcome out;
    out.channel_magnitudes.reserve(links.size());
    const double p_mw = std::pow(10.0, cfg.tx_power_dbm_per_ap / 10.0);
    double amplitude = 0.0;
    for (const LinkSample& link : links) {
        const double h_mag = std::abs(los_channel(cfg, link));
        out.channel_magnitudes.push_back(h_mag);
        amplitude += std::sqrt(p_mw) * h_mag;
    }
    if (amplitude == 0.0) {
        out.outage = true;
        out.rx_power_dbm = kNegInf;
        out.snr_db = kNegInf;
        return out;
    }
    out.rx_power_dbm = 20.0 * std::log10(amplitude);
    out.snr_db = out.rx_power_dbm - noise_power_dbm(cfg, NoiseSide::Hmd);
    out.outage = false;
    if (cfg.snr_outage_threshold_db && out.snr_db < *cfg.snr_outage_threshold_db) {
        out.outage = true;
    }
    return out;
}

bool in_field_of_view(double body_frame_azimuth_deg, const RadioConfig& cfg) {
    return std::abs(wrap_deg(body_frame_azimuth_deg)) <= cfg.fov_half_angle_deg;
}

}  // namespace beamtrace
