// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "beamtrace/geometry.hpp"

namespace beamtrace {

/// One 6DOF trace row: time, translation relative to the initial pose and
/// absolute head orientation relative to the initial facing.
struct MotionSample {
    std::int64_t t_ms = 0;
    Position3 translation;
    EulerAngles euler;
};

struct MovementTrace {
    std::vector<MotionSample> samples;
    std::string source;
    std::int64_t nominal_period_ms = 0;
};

enum class SynthKind { YawSweep, Static, RandomWalk };

/// Parameters of synthesize_trace. Step sizes are per sample; walks are
/// clamped to the max_* bounds.
struct SynthParams {
    std::int64_t duration_ms = 60000;
    std::int64_t period_ms = 320;
    double max_yaw_deg = 360.0;  // sweep target, or walk clamp
    std::uint64_t seed = 1;
    double yaw_step_deg = 3.0;
    double max_pitch_deg = 10.0;
    double max_roll_deg = 10.0;
    double pitch_roll_step_deg = 1.0;
    double translation_step_m = 0.02;
    double max_translation_m = 0.5;
};

/// Parses and validates the normalized trace CSV. Angles are canonicalized
/// to (-180, 180]; time must be strictly increasing.
MovementTrace load_trace(const std::filesystem::path& path);

/// Writes a trace in the normalized CSV schema (shortest round-trip decimals).
void save_trace(const MovementTrace& trace, const std::filesystem::path& path);

/// Decimates by nearest-timestamp selection on the grid t_first + k*period.
/// No interpolation; the first sample is always kept.
MovementTrace resample(const MovementTrace& trace, std::int64_t period_ms);

/// Deterministic synthetic traces: a linear yaw sweep, a static pose, or a
/// seeded bounded random walk.
MovementTrace synthesize_trace(SynthKind kind, const SynthParams& params);

}  // namespace beamtrace
