// SPDX-License-Identifier: Apache-2.0

#include "beamtrace/trace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "beamtrace/angles.hpp"
#include "beamtrace/errors.hpp"
#include "beamtrace/textio.hpp"

namespace beamtrace {

namespace {

constexpr const char* kHeader = "# t_ms,px_m,py_m,pz_m,yaw_deg,pitch_deg,roll_deg";

// Deterministic across platforms; <random> distributions are not.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [-1, 1).
    double symmetric() { return 2.0 * ((next() >> 11) * 0x1.0p-53) - 1.0; }
};

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::int64_t infer_nominal_period(const std::vector<MotionSample>& samples) {
    std::vector<std::int64_t> deltas;
    deltas.reserve(samples.size() - 1);
    for (std::size_t i = 1; i < samples.size(); ++i) {
        deltas.push_back(samples[i].t_ms - samples[i - 1].t_ms);
    }
    std::nth_element(deltas.begin(), deltas.begin() + deltas.size() / 2, deltas.end());
    return deltas[deltas.size() / 2];
}

double clamp_step(SplitMix64& rng, double current, double step, double bound) {
    return std::clamp(current + rng.symmetric() * step, -bound, bound);
}

}  // namespace

MovementTrace load_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw TraceError("cannot open trace file: " + path.string());
    }
    MovementTrace trace;
    trace.source = path.string();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 7) {
            throw ParseError(line_no, fields.size(),
                             "expected 7 comma-separated fields, got " +
                                 std::to_string(fields.size()));
        }
        MotionSample s;
        if (!parse_int(fields[0], s.t_ms) || s.t_ms < 0) {
            throw ParseError(line_no, 1, "bad t_ms '" + std::string(fields[0]) + "'");
        }
        double vals[6];
        for (std::size_t i = 0; i < 6; ++i) {
            if (!parse_double(fields[i + 1], vals[i]) || !std::isfinite(vals[i])) {
                throw ParseError(line_no, i + 2,
                                 "bad value '" + std::string(fields[i + 1]) + "'");
            }
        }
        s.translation = {vals[0], vals[1], vals[2]};
        s.euler = {wrap_deg(vals[3]), wrap_deg(vals[4]), wrap_deg(vals[5])};
        if (!trace.samples.empty() && s.t_ms <= trace.samples.back().t_ms) {
            throw NonMonotoneTime("t_ms not strictly increasing at line " +
                                  std::to_string(line_no));
        }
        trace.samples.push_back(s);
    }
    if (trace.samples.size() < 2) {
        throw TooShort();
    }
    trace.nominal_period_ms = infer_nominal_period(trace.samples);
    return trace;
}

void save_trace(const MovementTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw TraceError("cannot write trace file: " + path.string());
    }
    out << kHeader << '\n';
    for (const MotionSample& s : trace.samples) {
        out << format_int(s.t_ms) << ',' << format_double(s.translation.x) << ','
            << format_double(s.translation.y) << ',' << format_double(s.translation.z) << ','
            << format_double(s.euler.yaw_deg) << ',' << format_double(s.euler.pitch_deg) << ','
            << format_double(s.euler.roll_deg) << '\n';
    }
}

MovementTrace resample(const MovementTrace& trace, std::int64_t period_ms) {
    if (period_ms <= 0 || period_ms < trace.nominal_period_ms) {
        throw BadPeriod("resample period " + std::to_string(period_ms) +
                        " ms is below the trace's nominal period " +
                        std::to_string(trace.nominal_period_ms) + " ms");
    }
    MovementTrace out;
    out.source = trace.source;
    out.nominal_period_ms = period_ms;
    const std::int64_t t0 = trace.samples.front().t_ms;
    const std::int64_t span = trace.samples.back().t_ms - t0;
    std::size_t cursor = 0;
    for (std::int64_t k = 0; k * period_ms <= span; ++k) {
        const std::int64_t target = t0 + k * period_ms;
        while (cursor + 1 < trace.samples.size() &&
               std::abs(trace.samples[cursor + 1].t_ms - target) <
                   std::abs(trace.samples[cursor].t_ms - target)) {
            ++cursor;
        }
        if (out.samples.empty() || trace.samples[cursor].t_ms > out.samples.back().t_ms) {
            out.samples.push_back(trace.samples[cursor]);
        }
    }
    return out;
}

MovementTrace synthesize_trace(SynthKind kind, const SynthParams& params) {
    if (params.period_ms <= 0) {
        throw BadParams("period_ms must be positive");
    }
    if (params.duration_ms < params.period_ms) {
        throw BadParams("duration_ms must be at least one period");
    }
    if (!std::isfinite(params.max_yaw_deg)) {
        throw BadParams("max_yaw_deg must be finite");
    }

    MovementTrace trace;
    trace.nominal_period_ms = params.period_ms;
    const std::int64_t count = params.duration_ms / params.period_ms + 1;

    switch (kind) {
        case SynthKind::Static: {
            trace.source = "synth:static";
            for (std::int64_t k = 0; k < count; ++k) {
                trace.samples.push_back({k * params.period_ms, {}, {}});
            }
            break;
        }
        case SynthKind::YawSweep: {
            trace.source = "synth:yaw_sweep";
            for (std::int64_t k = 0; k < count; ++k) {
                const std::int64_t t = k * params.period_ms;
                const double yaw = params.max_yaw_deg * static_cast<double>(t) /
                                   static_cast<double>(params.duration_ms);
                trace.samples.push_back({t, {}, {wrap_deg(yaw), 0.0, 0.0}});
            }
            break;
        }
        case SynthKind::RandomWalk: {
            trace.source = "synth:random_walk";
            SplitMix64 rng(params.seed);
            double yaw = 0.0, pitch = 0.0, roll = 0.0;
            Position3 tr{};
            for (std::int64_t k = 0; k < count; ++k) {
                trace.samples.push_back({k * params.period_ms, tr, {yaw, pitch, roll}});
                yaw = clamp_step(rng, yaw, params.yaw_step_deg, params.max_yaw_deg);
                pitch = clamp_step(rng, pitch, params.pitch_roll_step_deg, params.max_pitch_deg);
                roll = clamp_step(rng, roll, params.pitch_roll_step_deg, params.max_roll_deg);
                tr.x = clamp_step(rng, tr.x, params.translation_step_m, params.max_translation_m);
                tr.y = clamp_step(rng, tr.y, params.translation_step_m, params.max_translation_m);
                tr.z = clamp_step(rng, tr.z, params.translation_step_m, params.max_translation_m);
            }
            break;
        }
    }
    return trace;
}

}  // namespace beamtrace
