// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>

namespace beamtrace {

inline double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Wraps an angle to the canonical interval (-180, 180].
inline double wrap_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w <= -180.0) {
        w += 360.0;
    } else if (w > 180.0) {
        w -= 360.0;
    }
    return w + 0.0;  // flush -0.0
}

/// Shifts `deg` by whole turns onto the branch nearest `ref`.
inline double unwrap_near_deg(double deg, double ref) {
    return deg + 360.0 * std::round((ref - deg) / 360.0);
}

}  // namespace beamtrace
