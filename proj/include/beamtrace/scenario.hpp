// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beamtrace/geometry.hpp"
#include "beamtrace/link.hpp"
#include "beamtrace/phased_array.hpp"
#include "beamtrace/trace.hpp"

namespace beamtrace {

/// How the HMD receives: a fixed wide boresight beam on the small array, a
/// steered single beam tracking AP-1, or a steered multi-beam tracking every
/// serving AP.
enum class ReceptionMode { QuasiOmniFixed, SingleBeamSteered, DualBeamSteered };

struct ScenarioConfig {
    double room_x_m = 20.0;
    double room_y_m = 20.0;
    double ap_height_m = 4.0;
    double hmd_height_m = 1.5;
    double hmd_ap_distance_m = 10.0;
    double separation_deg = 20.0;
    int ap_count = 2;
    RadioConfig radio;
    ArrayGeometry hmd_array{8, 8};
    ArrayGeometry ap_array{8, 8};
    ArrayGeometry quasi_omni_array{2, 4};
    ReceptionMode mode = ReceptionMode::DualBeamSteered;
    NormalizationMode normalization = NormalizationMode::PaperVectorNorm;
    /// One coefficient per serving AP; empty means equal split.
    std::vector<double> power_coefficients;
};

/// Per-AP slice of one time step.
struct PerApSample {
    double aoa_az_deg = 0.0;  // body frame
    double aoa_el_deg = 0.0;
    double aod_az_deg = 0.0;  // room frame
    double aod_el_deg = 0.0;
    double theta_mis_deg = 0.0;
    double phi_mis_deg = 0.0;
    double r_dis_m = 0.0;
    double distance_m = 0.0;
    bool in_fov = false;
    bool serving = false;
    double g_tx = 0.0;
    double g_rx = 0.0;
    double channel_mag = 0.0;
};

struct SampleResult {
    std::int64_t t_ms = 0;
    std::vector<PerApSample> aps;
    double rx_power_dbm = 0.0;
    double snr_db = 0.0;
    bool outage = false;
};

struct RxStats {
    double min = 0.0;
    double p5 = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double p95 = 0.0;
    double max = 0.0;
};

struct RunMetrics {
    std::size_t samples_total = 0;
    std::size_t samples_outage = 0;
    double outage_rate = 0.0;
    std::optional<RxStats> rx_level_dbm;  // absent when every sample is outage
};

struct RunResult {
    std::vector<SampleResult> samples;
    RunMetrics metrics;
};

/// Immutable, built once per configuration. APs sit at the configured height
/// and 3D distance, spread symmetrically about the initial facing with a
/// `separation_deg` azimuth step (L = 2 puts AP-1 at +sep/2 and AP-2 at
/// -sep/2; L = 1 puts the single AP dead ahead).
class Scenario {
public:
    static Scenario build(const ScenarioConfig& cfg);

    SampleResult step(const MotionSample& sample) const;
    RunResult run(const MovementTrace& trace) const;

    const ScenarioConfig& config() const { return cfg_; }
    const Position3& hmd_initial() const { return hmd0_; }
    const std::vector<Position3>& ap_positions() const { return aps_; }
    const std::vector<OrientationVector>& initial_orientations() const { return q0_; }

private:
    explicit Scenario(ScenarioConfig cfg);

    ScenarioConfig cfg_;
    Position3 hmd0_;
    std::vector<Position3> aps_;
    std::vector<OrientationVector> q0_;
    std::vector<int> serving_;       // AP indices that transmit
    std::vector<double> eta_;        // per serving AP
    ComplexVector quasi_weights_;    // fixed boresight beam, quasi-omni mode
};

/// Outage sample count over total count. Throws EmptyResults on empty input.
double outage_rate(const std::vector<SampleResult>& results);

/// Order statistics of the non-outage Rx levels (nearest-rank percentiles).
/// Throws AllOutage when no non-outage sample exists.
RxStats rx_level_stats(const std::vector<SampleResult>& results);

RunMetrics compute_metrics(const std::vector<SampleResult>& results);

}  // namespace beamtrace
