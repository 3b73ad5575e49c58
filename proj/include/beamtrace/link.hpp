// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace beamtrace {

/// Radio-level constants of a run.
struct RadioConfig {
    double carrier_hz = 28e9;
    double bandwidth_hz = 200e6;
    double temperature_k = 290.0;
    double noise_figure_db_hmd = 7.0;
    double noise_figure_db_ap = 7.0;
    double tx_power_dbm_per_ap = 10.0;
    double fov_half_angle_deg = 90.0;
    /// When set, samples with SNR below this are additionally flagged as
    /// outage. Off by default; the baseline outage rule is purely geometric.
    std::optional<double> snr_outage_threshold_db;
};

enum class NoiseSide { Hmd, Ap };

/// One AP->HMD link at a single time step.
struct LinkSample {
    double distance_m = 0.0;
    double g_tx_linear = 1.0;
    double g_rx_linear = 1.0;
    bool in_fov = true;
};

/// Combined reception outcome of one time step.
struct RxOutcome {
    double rx_power_dbm = 0.0;  // -inf when in outage
    double snr_db = 0.0;
    bool outage = false;
    std::vector<double> channel_magnitudes;  // one per input link, 0 when blocked
};

/// Thermal noise power kB*T*B*F in dBm.
double noise_power_dbm(const RadioConfig& cfg, NoiseSide side);

/// LoS channel amplitude: c/(4pi*f*d) * sqrt(g_tx*g_rx) * exp(-j*2pi*f*d/c).
/// Exactly 0 when the link is out of the field of view.
std::complex<double> los_channel(const RadioConfig& cfg, const LinkSample& link);

/// Unit-modulus MRT precoder for a downlink channel h: conj(h)/|h|, so that
/// the precoded channel v*h is real and non-negative.
std::complex<double> mrt_precoder(std::complex<double> h);

/// Coherent sum over the serving links; MRT makes the per-link amplitudes add
/// in phase. Outage (rx = -inf) when no in-FoV link contributes power.
RxOutcome coherent_rx_power(const RadioConfig& cfg, const std::vector<LinkSample>& links);

/// Azimuth-only field-of-view rule, boundary inclusive.
bool in_field_of_view(double body_frame_azimuth_deg, const RadioConfig& cfg);

}  // namespace beamtrace
