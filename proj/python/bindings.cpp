// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "beamtrace/geometry.hpp"
#include "beamtrace/io.hpp"
#include "beamtrace/link.hpp"
#include "beamtrace/phased_array.hpp"
#include "beamtrace/scenario.hpp"
#include "beamtrace/trace.hpp"

namespace py = pybind11;
using namespace beamtrace;

PYBIND11_MODULE(_beamtrace, m) {
    m.doc() = "mmWave multi-AP beam reception simulator core";
    m.attr("__version__") = kToolVersion;

    // geometry
    py::class_<Position3>(m, "Position3")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Position3::x)
        .def_readwrite("y", &Position3::y)
        .def_readwrite("z", &Position3::z);
    py::class_<OrientationVector>(m, "OrientationVector")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("r"), py::arg("theta_deg"),
             py::arg("phi_deg"))
        .def_readwrite("r", &OrientationVector::r)
        .def_readwrite("theta_deg", &OrientationVector::theta_deg)
        .def_readwrite("phi_deg", &OrientationVector::phi_deg);
    py::class_<EulerAngles>(m, "EulerAngles")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("yaw_deg"), py::arg("pitch_deg"),
             py::arg("roll_deg"))
        .def_readwrite("yaw_deg", &EulerAngles::yaw_deg)
        .def_readwrite("pitch_deg", &EulerAngles::pitch_deg)
        .def_readwrite("roll_deg", &EulerAngles::roll_deg);
    py::class_<RotationMatrix>(m, "RotationMatrix")
        .def(py::init<>())
        .def_readwrite("m", &RotationMatrix::m);
    py::class_<MisalignmentVector>(m, "MisalignmentVector")
        .def_readwrite("r_dis_m", &MisalignmentVector::r_dis_m)
        .def_readwrite("theta_mis_deg", &MisalignmentVector::theta_mis_deg)
        .def_readwrite("phi_mis_deg", &MisalignmentVector::phi_mis_deg);

    m.def("orientation_from_positions", &orientation_from_positions, py::arg("hmd"),
          py::arg("ap"));
    m.def("apply_translation", &apply_translation, py::arg("hmd"), py::arg("delta"),
          py::arg("ap"));
    m.def("rotation_matrix", &rotation_matrix, py::arg("angles"));
    m.def("apply_rotation", &apply_rotation, py::arg("q"), py::arg("rot"));
    m.def("misalignment", &misalignment, py::arg("q0"), py::arg("q_trn"), py::arg("q_rot"));
    m.def("body_frame_aoa", &body_frame_aoa, py::arg("hmd"), py::arg("head"), py::arg("ap"));

    // phased array
    py::class_<ArrayGeometry>(m, "ArrayGeometry")
        .def(py::init<>())
        .def(py::init<int, int>(), py::arg("m"), py::arg("n"))
        .def(py::init<int, int, double, double>(), py::arg("m"), py::arg("n"),
             py::arg("dx_wavelengths"), py::arg("dy_wavelengths"))
        .def_readwrite("m_count", &ArrayGeometry::m_count)
        .def_readwrite("n_count", &ArrayGeometry::n_count)
        .def_readwrite("dx_wavelengths", &ArrayGeometry::dx_wavelengths)
        .def_readwrite("dy_wavelengths", &ArrayGeometry::dy_wavelengths)
        .def("size", &ArrayGeometry::size);
    py::class_<BeamSpec>(m, "BeamSpec")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("theta_deg"), py::arg("phi_deg"),
             py::arg("eta"))
        .def_readwrite("theta_deg", &BeamSpec::theta_deg)
        .def_readwrite("phi_deg", &BeamSpec::phi_deg)
        .def_readwrite("eta", &BeamSpec::eta);
    py::enum_<NormalizationMode>(m, "NormalizationMode")
        .value("PaperVectorNorm", NormalizationMode::PaperVectorNorm)
        .value("ElementwiseConstantModulus", NormalizationMode::ElementwiseConstantModulus)
        .value("UnitPower", NormalizationMode::UnitPower);

    m.def("steering_vector", &steering_vector, py::arg("geo"), py::arg("theta_deg"),
          py::arg("phi_deg"));
    m.def("single_beam_weights", &single_beam_weights, py::arg("geo"), py::arg("theta_b_deg"),
          py::arg("phi_b_deg"));
    m.def("multi_beam_weights", &multi_beam_weights, py::arg("geo"), py::arg("beams"),
          py::arg("mode") = NormalizationMode::PaperVectorNorm);
    m.def("gain", &gain, py::arg("weights"), py::arg("geo"), py::arg("theta_deg"),
          py::arg("phi_deg"));
    m.def("gain_map", &gain_map, py::arg("weights"), py::arg("geo"), py::arg("theta_grid_deg"),
          py::arg("phi_grid_deg"));

    // link
    py::class_<RadioConfig>(m, "RadioConfig")
        .def(py::init<>())
        .def_readwrite("carrier_hz", &RadioConfig::carrier_hz)
        .def_readwrite("bandwidth_hz", &RadioConfig::bandwidth_hz)
        .def_readwrite("temperature_k", &RadioConfig::temperature_k)
        .def_readwrite("noise_figure_db_hmd", &RadioConfig::noise_figure_db_hmd)
        .def_readwrite("noise_figure_db_ap", &RadioConfig::noise_figure_db_ap)
        .def_readwrite("tx_power_dbm_per_ap", &RadioConfig::tx_power_dbm_per_ap)
        .def_readwrite("fov_half_angle_deg", &RadioConfig::fov_half_angle_deg)
        .def_readwrite("snr_outage_threshold_db", &RadioConfig::snr_outage_threshold_db);
    py::enum_<NoiseSide>(m, "NoiseSide")
        .value("Hmd", NoiseSide::Hmd)
        .value("Ap", NoiseSide::Ap);
    py::class_<LinkSample>(m, "LinkSample")
        .def(py::init<>())
        .def(py::init<double, double, double, bool>(), py::arg("distance_m"),
             py::arg("g_tx_linear"), py::arg("g_rx_linear"), py::arg("in_fov"))
        .def_readwrite("distance_m", &LinkSample::distance_m)
        .def_readwrite("g_tx_linear", &LinkSample::g_tx_linear)
        .def_readwrite("g_rx_linear", &LinkSample::g_rx_linear)
        .def_readwrite("in_fov", &LinkSample::in_fov);
    py::class_<RxOutcome>(m, "RxOutcome")
        .def_readonly("rx_power_dbm", &RxOutcome::rx_power_dbm)
        .def_readonly("snr_db", &RxOutcome::snr_db)
        .def_readonly("outage", &RxOutcome::outage)
        .def_readonly("channel_magnitudes", &RxOutcome::channel_magnitudes);

    m.def("noise_power_dbm", &noise_power_dbm, py::arg("cfg"), py::arg("side"));
    m.def("los_channel", &los_channel, py::arg("cfg"), py::arg("link"));
    m.def("mrt_precoder", &mrt_precoder, py::arg("h"));
    m.def("coherent_rx_power", &coherent_rx_power, py::arg("cfg"), py::arg("links"));
    m.def("in_field_of_view", &in_field_of_view, py::arg("body_frame_azimuth_deg"),
          py::arg("cfg"));

    // trace
    py::class_<MotionSample>(m, "MotionSample")
        .def(py::init<>())
        .def_readwrite("t_ms", &MotionSample::t_ms)
        .def_readwrite("translation", &MotionSample::translation)
        .def_readwrite("euler", &MotionSample::euler);
    py::class_<MovementTrace>(m, "MovementTrace")
        .def(py::init<>())
        .def_readwrite("samples", &MovementTrace::samples)
        .def_readwrite("source", &MovementTrace::source)
        .def_readwrite("nominal_period_ms", &MovementTrace::nominal_period_ms);
    py::enum_<SynthKind>(m, "SynthKind")
        .value("YawSweep", SynthKind::YawSweep)
        .value("Static", SynthKind::Static)
        .value("RandomWalk", SynthKind::RandomWalk);
    py::class_<SynthParams>(m, "SynthParams")
        .def(py::init<>())
        .def_readwrite("duration_ms", &SynthParams::duration_ms)
        .def_readwrite("period_ms", &SynthParams::period_ms)
        .def_readwrite("max_yaw_deg", &SynthParams::max_yaw_deg)
        .def_readwrite("seed", &SynthParams::seed)
        .def_readwrite("yaw_step_deg", &SynthParams::yaw_step_deg)
        .def_readwrite("max_pitch_deg", &SynthParams::max_pitch_deg)
        .def_readwrite("max_roll_deg", &SynthParams::max_roll_deg)
        .def_readwrite("pitch_roll_step_deg", &SynthParams::pitch_roll_step_deg)
        .def_readwrite("translation_step_m", &SynthParams::translation_step_m)
        .def_readwrite("max_translation_m", &SynthParams::max_translation_m);

    m.def("load_trace", &load_trace, py::arg("path"));
    m.def("save_trace", &save_trace, py::arg("trace"), py::arg("path"));
    m.def("resample", &resample, py::arg("trace"), py::arg("period_ms"));
    m.def("synthesize_trace", &synthesize_trace, py::arg("kind"), py::arg("params"));

    // scenario
    py::enum_<ReceptionMode>(m, "ReceptionMode")
        .value("QuasiOmniFixed", ReceptionMode::QuasiOmniFixed)
        .value("SingleBeamSteered", ReceptionMode::SingleBeamSteered)
        .value("DualBeamSteered", ReceptionMode::DualBeamSteered);
    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("room_x_m", &ScenarioConfig::room_x_m)
        .def_readwrite("room_y_m", &ScenarioConfig::room_y_m)
        .def_readwrite("ap_height_m", &ScenarioConfig::ap_height_m)
        .def_readwrite("hmd_height_m", &ScenarioConfig::hmd_height_m)
        .def_readwrite("hmd_ap_distance_m", &ScenarioConfig::hmd_ap_distance_m)
        .def_readwrite("separation_deg", &ScenarioConfig::separation_deg)
        .def_readwrite("ap_count", &ScenarioConfig::ap_count)
        .def_readwrite("radio", &ScenarioConfig::radio)
        .def_readwrite("hmd_array", &ScenarioConfig::hmd_array)
        .def_readwrite("ap_array", &ScenarioConfig::ap_array)
        .def_readwrite("quasi_omni_array", &ScenarioConfig::quasi_omni_array)
        .def_readwrite("mode", &ScenarioConfig::mode)
        .def_readwrite("normalization", &ScenarioConfig::normalization)
        .def_readwrite("power_coefficients", &ScenarioConfig::power_coefficients);
    py::class_<PerApSample>(m, "PerApSample")
        .def_readonly("aoa_az_deg", &PerApSample::aoa_az_deg)
        .def_readonly("aoa_el_deg", &PerApSample::aoa_el_deg)
        .def_readonly("aod_az_deg", &PerApSample::aod_az_deg)
        .def_readonly("aod_el_deg", &PerApSample::aod_el_deg)
        .def_readonly("theta_mis_deg", &PerApSample::theta_mis_deg)
        .def_readonly("phi_mis_deg", &PerApSample::phi_mis_deg)
        .def_readonly("r_dis_m", &PerApSample::r_dis_m)
        .def_readonly("distance_m", &PerApSample::distance_m)
        .def_readonly("in_fov", &PerApSample::in_fov)
        .def_readonly("serving", &PerApSample::serving)
        .def_readonly("g_tx", &PerApSample::g_tx)
        .def_readonly("g_rx", &PerApSample::g_rx)
        .def_readonly("channel_mag", &PerApSample::channel_mag);
    py::class_<SampleResult>(m, "SampleResult")
        .def_readonly("t_ms", &SampleResult::t_ms)
        .def_readonly("aps", &SampleResult::aps)
        .def_readonly("rx_power_dbm", &SampleResult::rx_power_dbm)
        .def_readonly("snr_db", &SampleResult::snr_db)
        .def_readonly("outage", &SampleResult::outage);
    py::class_<RxStats>(m, "RxStats")
        .def_readonly("min", &RxStats::min)
        .def_readonly("p5", &RxStats::p5)
        .def_readonly("median", &RxStats::median)
        .def_readonly("mean", &RxStats::mean)
        .def_readonly("p95", &RxStats::p95)
        .def_readonly("max", &RxStats::max);
    py::class_<RunMetrics>(m, "RunMetrics")
        .def_readonly("samples_total", &RunMetrics::samples_total)
        .def_readonly("samples_outage", &RunMetrics::samples_outage)
        .def_readonly("outage_rate", &RunMetrics::outage_rate)
        .def_readonly("rx_level_dbm", &RunMetrics::rx_level_dbm);
    py::class_<RunResult>(m, "RunResult")
        .def_readonly("samples", &RunResult::samples)
        .def_readonly("metrics", &RunResult::metrics);
    py::class_<Scenario>(m, "Scenario")
        .def_static("build", &Scenario::build, py::arg("cfg"))
        .def("step", &Scenario::step, py::arg("sample"))
        .def("run", &Scenario::run, py::arg("trace"))
        .def_property_readonly("hmd_initial", &Scenario::hmd_initial)
        .def_property_readonly("ap_positions", &Scenario::ap_positions)
        .def_property_readonly("initial_orientations", &Scenario::initial_orientations);

    m.def("outage_rate", &outage_rate, py::arg("results"));
    m.def("rx_level_stats", &rx_level_stats, py::arg("results"));
    m.def("config_from_json_text", [](const std::string& text) {
        return config_from_json(nlohmann::json::parse(text));
    });
    m.def("config_to_json_text",
          [](const ScenarioConfig& cfg) { return config_to_json(cfg).dump(2); });
}
