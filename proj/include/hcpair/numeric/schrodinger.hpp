#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hcpair/numeric/grid.hpp"
#include "hcpair/numeric/tridiagonal.hpp"
#include "hcpair/units.hpp"

namespace hcpair::numeric {

// Square barrier of area A (strength of the delta limit it regularizes):
// height A/width over |x - center| < width/2. width below two grid spacings
// cannot be resolved and is rejected by the grid samplers below.
struct RegularizedDelta {
    double strength = 0.0;  // A >= 0
    double width = 0.0;

    void validate() const;
    double potential(double x, double center = 0.0) const;
};

// Negative-control hook: scaling the off-diagonal stencil away from 1
// de-tunes the kinetic operator so deliberate-bug checks can verify the
// validation suite actually fails.
struct StencilOptions {
    double off_diag_scale = 1.0;
};

// Interior-point Hamiltonian of the relative-motion problem
//   H = -(hbar^2/m) d^2/dx^2 + V(x)
// with Dirichlet walls at the grid ends (three-point stencil). The kinetic
// coefficient hbar^2/m reflects the reduced mass m/2 of the pair.
SymmetricTridiagonal build_hamiltonian(const Grid& grid,
                                       const std::function<double(double)>& V,
                                       const PhysicalUnits& u,
                                       const StencilOptions& stencil = {});

// Eigenpairs mapped back onto the full grid (walls included as zeros).
// Eigenvectors are normalized to unit density by trapezoid quadrature and
// sign-fixed so the first significant lobe is positive.
struct EigenResult {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    std::vector<double> residuals;  // dimensionless matrix residuals
};

EigenResult solve_lowest_states(const Grid& grid, const std::function<double(double)>& V,
                                const PhysicalUnits& u, int count,
                                const StencilOptions& stencil = {});

// Expectation of weight(x) in a grid amplitude by trapezoid quadrature.
// Amplitudes normalized by solve_lowest_states give expectation 1 for
// weight = 1 exactly (same quadrature rule both places).
double expectation_numeric(std::span<const double> amplitude, const Grid& grid,
                           const std::function<double(double)>& weight);

// min over parities of ||v -+ mirror(v)|| / ||v||; 0 for a parity eigenstate.
// Requires a grid symmetric about its midpoint.
double parity_defect(std::span<const double> amplitude);

// Sign changes of the amplitude across interior nodes, ignoring entries
// below a relative threshold.
int count_sign_changes(std::span<const double> amplitude, double rel_threshold = 1e-8);

// Linear interpolation of a grid amplitude at x.
double value_at(std::span<const double> amplitude, const Grid& grid, double x);

}  // namespace hcpair::numeric
