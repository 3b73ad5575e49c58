// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

namespace beamtrace {

/// Cartesian position in the room frame, meters, z up.
struct Position3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Position3 operator+(const Position3& a, const Position3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Position3 operator-(const Position3& a, const Position3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

/// Spherical HMD<->AP relation: range in meters, azimuth in (-180, 180],
/// elevation in [-90, 90], degrees.
struct OrientationVector {
    double r = 0.0;
    double theta_deg = 0.0;
    double phi_deg = 0.0;
};

/// Head orientation as yaw/pitch/roll, degrees, canonical (-180, 180].
struct EulerAngles {
    double yaw_deg = 0.0;
    double pitch_deg = 0.0;
    double roll_deg = 0.0;
};

/// 3x3 rotation, row-major; applied to row vectors as v * R.
struct RotationMatrix {
    std::array<std::array<double, 3>, 3> m{};
};

/// One 6DOF motion state: translation relative to the initial pose plus
/// absolute head orientation relative to the initial facing.
struct Pose6DOF {
    Position3 translation;
    EulerAngles rotation;
};

/// Componentwise misalignment: distance discrepancy (may be negative) and
/// azimuth/elevation offsets in degrees.
struct MisalignmentVector {
    double r_dis_m = 0.0;
    double theta_mis_deg = 0.0;
    double phi_mis_deg = 0.0;
};

/// Spherical form of the difference vector (hmd - ap). Throws ZeroDistance
/// when the positions coincide within 1e-9 m. The vertical degenerate case
/// (x = y = 0) reports azimuth 0.
OrientationVector orientation_from_positions(const Position3& hmd, const Position3& ap);

/// Orientation after moving the HMD by `delta`.
OrientationVector apply_translation(const Position3& hmd, const Position3& delta,
                                    const Position3& ap);

/// Rx * Ry * Rz for the given yaw (z), pitch (y) and roll (x) angles.
RotationMatrix rotation_matrix(const EulerAngles& angles);

/// Right-multiplies the orientation (as a row vector) by `rot` and converts
/// back to spherical form. Range is preserved.
OrientationVector apply_rotation(const OrientationVector& q, const RotationMatrix& rot);

/// 2*q0 - (q_trn + q_rot), with the angle operands unwrapped to the branch
/// nearest q0 before combining and the result wrapped to (-180, 180].
MisalignmentVector misalignment(const OrientationVector& q0, const OrientationVector& q_trn,
                                const OrientationVector& q_rot);

/// AP direction in the rotated head frame: the room-frame difference vector
/// (hmd - ap) carried through the inverse head rotation. Azimuth 0 means the
/// AP is dead ahead; a positive yaw shifts the azimuth by -yaw.
OrientationVector body_frame_aoa(const Position3& hmd, const EulerAngles& head,
                                 const Position3& ap);

// Conversions used by the operations above; exposed for tests.
Position3 spherical_to_cartesian(const OrientationVector& q);
OrientationVector cartesian_to_spherical(const Position3& v);

}  // namespace beamtrace
