#include "hcpair/numeric/schrodinger.hpp"

#include <algorithm>
#include <cmath>

#include "hcpair/quadrature.hpp"

namespace hcpair::numeric {

void RegularizedDelta::validate() const {
    if (strength < 0.0 || !std::isfinite(strength))
        throw std::invalid_argument("RegularizedDelta: strength A must be finite and >= 0");
    if (!(width > 0.0) || !std::isfinite(width))
        throw std::invalid_argument("RegularizedDelta: width must be finite and > 0");
}

double RegularizedDelta::potential(double x, double center) const {
    return std::abs(x - center) < 0.5 * width ? strength / width : 0.0;
}

SymmetricTridiagonal build_hamiltonian(const Grid& grid,
                                       const std::function<double(double)>& V,
                                       const PhysicalUnits& u,
                                       const StencilOptions& stencil) {
    u.validate();
    const int m = grid.npoints - 2;  // interior points
    if (m < 2)
        throw std::invalid_argument("build_hamiltonian: grid too small, need >= 4 points");
    const double c = u.hbar * u.hbar / u.mass;
    const double inv_dx2 = 1.0 / (grid.spacing * grid.spacing);
    std::vector<double> diag(m), off(m - 1);
    for (int i = 0; i < m; ++i) {
        const double v = V(grid.point(i + 1));
        if (!std::isfinite(v))
            throw std::invalid_argument("build_hamiltonian: potential sample not finite");
        diag[i] = 2.0 * c * inv_dx2 + v;
    }
    std::fill(off.begin(), off.end(), -c * inv_dx2 * stencil.off_diag_scale);
    return SymmetricTridiagonal(std::move(diag), std::move(off));
}

EigenResult solve_lowest_states(const Grid& grid, const std::function<double(double)>& V,
                                const PhysicalUnits& u, int count,
                                const StencilOptions& stencil) {
    if (count < 1 || count > grid.npoints - 2)
        throw std::invalid_argument("solve_lowest_states: count must lie in [1, npoints-2]");
    const SymmetricTridiagonal H = build_hamiltonian(grid, V, u, stencil);
    const TridiagonalEigenResult raw = solve_lowest(H, count);

    EigenResult out;
    out.eigenvalues = raw.values;
    out.residuals = raw.residuals;
    out.eigenvectors.assign(count, std::vector<double>(grid.npoints, 0.0));
    for (int j = 0; j < count; ++j) {
        std::vector<double>& full = out.eigenvectors[j];
        std::copy(raw.vectors[j].begin(), raw.vectors[j].end(), full.begin() + 1);
        std::vector<double> density(grid.npoints);
        for (int i = 0; i < grid.npoints; ++i) density[i] = full[i] * full[i];
        const double nrm = std::sqrt(hcpair::trapezoid(density, grid.spacing));
        for (double& x : full) x /= nrm;
    }
    return out;
}

double expectation_numeric(std::span<const double> amplitude, const Grid& grid,
                           const std::function<double(double)>& weight) {
    if (static_cast<int>(amplitude.size()) != grid.npoints)
        throw std::invalid_argument("expectation_numeric: amplitude/grid size mismatch");
    std::vector<double> integrand(grid.npoints);
    for (int i = 0; i < grid.npoints; ++i)
        integrand[i] = weight(grid.point(i)) * amplitude[i] * amplitude[i];
    return hcpair::trapezoid(integrand, grid.spacing);
}

double parity_defect(std::span<const double> amplitude) {
    const std::size_t n = amplitude.size();
    if (n < 3) throw std::invalid_argument("parity_defect: need at least 3 samples");
    double even2 = 0.0, odd2 = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = amplitude[i];
        const double b = amplitude[n - 1 - i];
        even2 += (a - b) * (a - b);
        odd2 += (a + b) * (a + b);
        norm2 += a * a;
    }
    return std::sqrt(std::min(even2, odd2) / norm2);
}

int count_sign_changes(std::span<const double> amplitude, double rel_threshold) {
    double vmax = 0.0;
    for (double x : amplitude) vmax = std::max(vmax, std::abs(x));
    const double cut = rel_threshold * vmax;
    int changes = 0;
    double prev = 0.0;
    for (double x : amplitude) {
        if (std::abs(x) <= cut) continue;
        if (prev != 0.0 && x * prev < 0.0) ++changes;
        prev = x;
    }
    return changes;
}

double value_at(std::span<const double> amplitude, const Grid& grid, double x) {
    if (static_cast<int>(amplitude.size()) != grid.npoints)
        throw std::invalid_argument("value_at: amplitude/grid size mismatch");
    if (x < grid.x_min || x > grid.x_max)
        throw std::invalid_argument("value_at: x outside the grid");
    const double t = (x - grid.x_min) / grid.spacing;
    const int i = std::min(grid.npoints - 2, static_cast<int>(t));
    const double f = t - i;
    return (1.0 - f) * amplitude[i] + f * amplitude[i + 1];
}

}  // namespace hcpair::numeric
