// SPDX-License-Identifier: Apache-2.0

#include "beamtrace/phased_array.hpp"

#include <cmath>
#include <numbers>

#include "beamtrace/angles.hpp"
#include "beamtrace/errors.hpp"

namespace beamtrace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexVector phase_vector(const ArrayGeometry& geo, double theta_deg, double phi_deg,
                           double sign) {
    const double th = deg2rad(theta_deg);
    const double ph = deg2rad(phi_deg);
    const double u = geo.dx_wavelengths * std::sin(th) * std::cos(ph);
    const double v = geo.dy_wavelengths * std::sin(th) * std::sin(ph);
    ComplexVector out;
    out.reserve(static_cast<std::size_t>(geo.size()));
    for (int m = 0; m < geo.m_count; ++m) {
        for (int n = 0; n < geo.n_count; ++n) {
            const double phase = sign * kTwoPi * (m * u + n * v);
            out.emplace_back(std::cos(phase), std::sin(phase));
        }
    }
    return out;
}

}  // namespace

ComplexVector steering_vector(const ArrayGeometry& geo, double theta_deg, double phi_deg) {
    return phase_vector(geo, theta_deg, phi_deg, -1.0);
}

ComplexVector single_beam_weights(const ArrayGeometry& geo, double theta_b_deg,
                                  double phi_b_deg) {
    return phase_vector(geo, theta_b_deg, phi_b_deg, +1.0);
}

ComplexVector multi_beam_weights(const ArrayGeometry& geo, const std::vector<BeamSpec>& beams,
                                 NormalizationMode mode) {
    if (beams.empty()) {
        throw EmptyBeamSet();
    }
    if (static_cast<int>(beams.size()) > geo.size()) {
        throw TooManyBeams("more beams (" + std::to_string(beams.size()) +
                           ") than array elements (" + std::to_string(geo.size()) + ")");
    }
    double eta_sum = 0.0;
    for (const BeamSpec& b : beams) {
        if (b.eta < 0.0 || b.eta > 1.0) {
            throw BadPowerCoefficients("power coefficient outside [0, 1]");
        }
        eta_sum += b.eta;
    }
    if (std::abs(eta_sum - 1.0) > 1e-9) {
        throw BadPowerCoefficients("power coefficients sum to " + std::to_string(eta_sum) +
                                   ", expected 1");
    }

    const std::size_t size = static_cast<std::size_t>(geo.size());
    ComplexVector combined(size, {0.0, 0.0});
    double sqrt_eta_sum = 0.0;
    for (const BeamSpec& b : beams) {
        const double a = std::sqrt(b.eta);
        sqrt_eta_sum += a;
        const ComplexVector w = single_beam_weights(geo, b.theta_deg, b.phi_deg);
        for (std::size_t i = 0; i < size; ++i) {
            combined[i] += a * w[i];
        }
    }

    switch (mode) {
        case NormalizationMode::PaperVectorNorm: {
            // Every single-beam vector has Euclidean norm sqrt(M*N).
            const double denom = sqrt_eta_sum * std::sqrt(static_cast<double>(size));
            for (auto& c : combined) {
                c /= denom;
            }
            break;
        }
        case NormalizationMode::ElementwiseConstantModulus: {
            const double scale = 1.0 / std::sqrt(static_cast<double>(size));
            for (auto& c : combined) {
                const double mag = std::abs(c);
                c = (mag < 1e-12) ? std::complex<double>{0.0, 0.0} : c / mag * scale;
            }
            break;
        }
        case NormalizationMode::UnitPower: {
            double power = 0.0;
            for (const auto& c : combined) {
                power += std::norm(c);
            }
            const double norm = std::sqrt(power);
            for (auto& c : combined) {
                c /= norm;
            }
            break;
        }
    }
    return combined;
}

double gain(const ComplexVector& weights, const ArrayGeometry& geo, double theta_deg,
            double phi_deg) {
    if (weights.size() != static_cast<std::size_t>(geo.size())) {
        throw DimensionMismatch("weight vector has " + std::to_string(weights.size()) +
                                " entries, array has " + std::to_string(geo.size()));
    }
    const ComplexVector a = steering_vector(geo, theta_deg, phi_deg);
    std::complex<double> inner{0.0, 0.0};
    for (std::size_t i = 0; i < weights.size(); ++i) {
        inner += weights[i] * a[i];
    }
    return std::norm(inner);
}

std::vector<std::vector<double>> gain_map(const ComplexVector& weights, const ArrayGeometry& geo,
                                          const std::vector<double>& theta_grid_deg,
                                          const std::vector<double>& phi_grid_deg) {
    if (theta_grid_deg.empty() || phi_grid_deg.empty()) {
        throw EmptyGrid();
    }
    for (const auto* grid : {&theta_grid_deg, &phi_grid_deg}) {
        for (std::size_t i = 1; i < grid->size(); ++i) {
            if ((*grid)[i] <= (*grid)[i - 1]) {
                throw BadGrid("grid values must be strictly increasing");
            }
        }
    }
    std::vector<std::vector<double>> out(theta_grid_deg.size(),
                                         std::vector<double>(phi_grid_deg.size(), 0.0));
    for (std::size_t i = 0; i < theta_grid_deg.size(); ++i) {
        for (std::size_t j = 0; j < phi_grid_deg.size(); ++j) {
            out[i][j] = gain(weights, geo, theta_grid_deg[i], phi_grid_deg[j]);
        }
    }
    return out;
}

}  // namespace beamtrace
