// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

namespace beamtrace {

/// Uniform planar array: M x N elements, spacings in wavelengths.
struct ArrayGeometry {
    int m_count = 8;
    int n_count = 8;
    double dx_wavelengths = 0.5;
    double dy_wavelengths = 0.5;

    int size() const { return m_count * n_count; }
};

/// One intended steering direction plus its power coefficient.
struct BeamSpec {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double eta = 1.0;
};

/// How the combined multi-beam weight vector is scaled. PaperVectorNorm
/// divides by the sum of the per-beam Euclidean norms; constant-modulus
/// forces unit-modulus entries (phase-shifter realizable); UnitPower
/// renormalizes the sum to exact unit power.
enum class NormalizationMode {
    PaperVectorNorm,
    ElementwiseConstantModulus,
    UnitPower,
};

using ComplexVector = std::vector<std::complex<double>>;

/// Per-element array response toward (theta, phi). Entry (m, n), flattened
/// row-major as m * N + n, is exp(-j*2pi*(m*dx*sin(th)*cos(ph) + n*dy*sin(th)*sin(ph))).
ComplexVector steering_vector(const ArrayGeometry& geo, double theta_deg, double phi_deg);

/// Conjugate-match weights for one beam; unit modulus per entry, not
/// power-normalized.
ComplexVector single_beam_weights(const ArrayGeometry& geo, double theta_b_deg,
                                  double phi_b_deg);

/// sum_l sqrt(eta_l) * w_l, scaled per `mode`. Power coefficients must be in
/// [0, 1] and sum to 1 within 1e-9.
ComplexVector multi_beam_weights(const ArrayGeometry& geo, const std::vector<BeamSpec>& beams,
                                 NormalizationMode mode = NormalizationMode::PaperVectorNorm);

/// |w . a(theta, phi)|^2, dimensionless. Unit-power single-beam weights give
/// M*N at their steering direction.
double gain(const ComplexVector& weights, const ArrayGeometry& geo, double theta_deg,
            double phi_deg);

/// Bulk gain evaluation; entry (i, j) is gain at (theta_grid[i], phi_grid[j]).
/// Grids must be non-empty and strictly increasing.
std::vector<std::vector<double>> gain_map(const ComplexVector& weights, const ArrayGeometry& geo,
                                          const std::vector<double>& theta_grid_deg,
                                          const std::vector<double>& phi_grid_deg);

}  // namespace beamtrace
