// SPDX-License-Identifier: Apache-2.0

#include "beamtrace/geometry.hpp"

#include <cmath>

#include "beamtrace/angles.hpp"
#include "beamtrace/errors.hpp"

namespace beamtrace {

Position3 spherical_to_cartesian(const OrientationVector& q) {
    const double th = deg2rad(q.theta_deg);
    const double ph = deg2rad(q.phi_deg);
    return {q.r * std::cos(ph) * std::cos(th), q.r * std::cos(ph) * std::sin(th),
            q.r * std::sin(ph)};
}

OrientationVector cartesian_to_spherical(const Position3& v) {
    OrientationVector q;
    const double hxy = std::hypot(v.x, v.y);
    q.r = std::hypot(hxy, v.z);
    q.theta_deg = (hxy == 0.0) ? 0.0 : wrap_deg(rad2deg(std::atan2(v.y, v.x)));
    q.phi_deg = (q.r == 0.0) ? 0.0 : rad2deg(std::atan2(v.z, hxy));
    return q;
}

OrientationVector orientation_from_positions(const Position3& hmd, const Position3& ap) {
    const Position3 d = hmd - ap;
    OrientationVector q = cartesian_to_spherical(d);
    if (q.r < 1e-9) {
        throw ZeroDistance();
    }
    return q;
}

OrientationVector apply_translation(const Position3& hmd, const Position3& delta,
                                    const Position3& ap) {
    return orientation_from_positions(hmd + delta, ap);
}

namespace {

RotationMatrix multiply(const RotationMatrix& a, const RotationMatrix& b) {
    RotationMatrix out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
        }
    }
    return out;
}

Position3 row_times_matrix(const Position3& v, const RotationMatrix& r) {
    return {v.x * r.m[0][0] + v.y * r.m[1][0] + v.z * r.m[2][0],
            v.x * r.m[0][1] + v.y * r.m[1][1] + v.z * r.m[2][1],
            v.x * r.m[0][2] + v.y * r.m[1][2] + v.z * r.m[2][2]};
}

// v * R^T, i.e. the coordinates of a fixed vector in the rotated frame.
Position3 row_times_transpose(const Position3& v, const RotationMatrix& r) {
    return {v.x * r.m[0][0] + v.y * r.m[0][1] + v.z * r.m[0][2],
            v.x * r.m[1][0] + v.y * r.m[1][1] + v.z * r.m[1][2],
            v.x * r.m[2][0] + v.y * r.m[2][1] + v.z * r.m[2][2]};
}

}  // namespace

RotationMatrix rotation_matrix(const EulerAngles& angles) {
    const double a = deg2rad(angles.yaw_deg);
    const double b = deg2rad(angles.pitch_deg);
    const double g = deg2rad(angles.roll_deg);
    const double ca = std::cos(a), sa = std::sin(a);
    const double cb = std::cos(b), sb = std::sin(b);
    const double cg = std::cos(g), sg = std::sin(g);

    RotationMatrix rx{{{{1.0, 0.0, 0.0}, {0.0, cg, sg}, {0.0, -sg, cg}}}};
    RotationMatrix ry{{{{cb, 0.0, -sb}, {0.0, 1.0, 0.0}, {sb, 0.0, cb}}}};
    RotationMatrix rz{{{{ca, sa, 0.0}, {-sa, ca, 0.0}, {0.0, 0.0, 1.0}}}};
    return multiply(rx, multiply(ry, rz));
}

OrientationVector apply_rotation(const OrientationVector& q, const RotationMatrix& rot) {
    const Position3 v = spherical_to_cartesian(q);
    return cartesian_to_spherical(row_times_matrix(v, rot));
}

MisalignmentVector misalignment(const OrientationVector& q0, const OrientationVector& q_trn,
                                const OrientationVector& q_rot) {
    MisalignmentVector mis;
    mis.r_dis_m = 2.0 * q0.r - (q_trn.r + q_rot.r);
    const double th_trn = unwrap_near_deg(q_trn.theta_deg, q0.theta_deg);
    const double th_rot = unwrap_near_deg(q_rot.theta_deg, q0.theta_deg);
    mis.theta_mis_deg = wrap_deg(2.0 * q0.theta_deg - (th_trn + th_rot));
    const double ph_trn = unwrap_near_deg(q_trn.phi_deg, q0.phi_deg);
    const double ph_rot = unwrap_near_deg(q_rot.phi_deg, q0.phi_deg);
    mis.phi_mis_deg = wrap_deg(2.0 * q0.phi_deg - (ph_trn + ph_rot));
    return mis;
}

OrientationVector body_frame_aoa(const Position3& hmd, const EulerAngles& head,
                                 const Position3& ap) {
    const Position3 d = hmd - ap;
    OrientationVector q = cartesian_to_spherical(row_times_transpose(d, rotation_matrix(head)));
    if (q.r < 1e-9) {
        throw ZeroDistance();
    }
    return q;
}

}  // namespace beamtrace
