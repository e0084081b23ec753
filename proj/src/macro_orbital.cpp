#include "hcpair/macro_orbital.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hcpair/quadrature.hpp"

namespace hcpair {

MacroOrbital make_macro_orbital(SymmetryKind symmetry, double q, double K) {
    MacroOrbital mo;
    mo.relative = RelativeWaveform{symmetry, q};
    mo.relative.validate();
    if (!std::isfinite(K)) throw std::invalid_argument("make_macro_orbital: K must be finite");
    mo.K = K;
    // With the sqrt(2) waveform convention the half-loop norm integral equals
    // lambda/2 for every family, so B = sqrt(2/lambda) = sqrt(q/pi).
    mo.norm_B = std::sqrt(q / pi);
    return mo;
}

std::complex<double> macro_orbital_eval(const MacroOrbital& mo, double x, double X) {
    return mo.norm_B * relative_waveform_eval(mo.relative, x) *
           std::exp(std::complex<double>(0.0, mo.K * X));
}

EigencheckResult paired_operator_eigencheck(const MacroOrbital& mo, const PhysicalUnits& u,
                                            int nx, int nX) {
    u.validate();
    mo.relative.validate();
    const double lambda = 2.0 * pi / mo.relative.q;
    // The grid spans one wavelength in x (two exclusive half-loops); require
    // at least 50 points per half-loop to resolve the curvature.
    if (nx < 101 || nX < 11)
        throw std::invalid_argument(
            "paired_operator_eigencheck: under-resolved grid, need nx >= 101 and nX >= 11");

    const double x_lo = -0.5 * lambda, x_hi = 0.5 * lambda;
    const double X_lo = -0.5 * lambda, X_hi = 0.5 * lambda;
    const double dx = (x_hi - x_lo) / (nx - 1);
    const double dX = (X_hi - X_lo) / (nX - 1);

    std::vector<std::complex<double>> grid(static_cast<std::size_t>(nx) * nX);
    const auto at = [&](int i, int j) -> std::complex<double>& {
        return grid[static_cast<std::size_t>(i) * nX + j];
    };
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nX; ++j)
            at(i, j) = macro_orbital_eval(mo, x_lo + i * dx, X_lo + j * dX);

    const double q = mo.relative.q;
    const double ck = u.hbar * u.hbar / (2.0 * u.mass);   // relative coefficient
    const double cK = u.hbar * u.hbar / (8.0 * u.mass);   // centre-of-mass coefficient
    const double eigenvalue = ck * q * q + cK * mo.K * mo.K;

    // Skip grid points next to the contact cusp: the second difference does
    // not converge across a kink in the derivative.
    const bool has_cusp = mo.relative.symmetry == SymmetryKind::bosonic_even_cusp;
    const double cusp_margin = 2.5 * dx;

    double num = 0.0, den = 0.0;
    for (int i = 1; i + 1 < nx; ++i) {
        const double x = x_lo + i * dx;
        if (has_cusp && std::abs(x) < cusp_margin) continue;
        for (int j = 1; j + 1 < nX; ++j) {
            const std::complex<double> lap_x = (at(i - 1, j) - 2.0 * at(i, j) + at(i + 1, j));
            const std::complex<double> lap_X = (at(i, j - 1) - 2.0 * at(i, j) + at(i, j + 1));
            const std::complex<double> h_xi =
                -ck * lap_x / (dx * dx) - cK * lap_X / (dX * dX);
            const std::complex<double> r = h_xi - eigenvalue * at(i, j);
            num += std::norm(r);
            den += std::norm(at(i, j));
        }
    }
    if (!(den > 0.0))
        throw std::invalid_argument("paired_operator_eigencheck: waveform vanished on grid");
    return {eigenvalue, std::sqrt(num / den)};
}

std::complex<double> TwoBodyProduct::direct_term(double x1, double X1, double x2,
                                                 double X2) const {
    return a.norm_B * relative_waveform_eval(a.relative, x1) * b.norm_B *
           relative_waveform_eval(b.relative, x2) *
           std::exp(std::complex<double>(0.0, a.K * X1 + b.K * X2));
}

std::complex<double> TwoBodyProduct::operator()(double x1, double X1, double x2,
                                                double X2) const {
    const double rel =
        a.norm_B * relative_waveform_eval(a.relative, x1) * b.norm_B *
        relative_waveform_eval(b.relative, x2);
    const std::complex<double> direct =
        std::exp(std::complex<double>(0.0, a.K * X1 + b.K * X2));
    const std::complex<double> exchanged =
        std::exp(std::complex<double>(0.0, b.K * X1 + a.K * X2));
    const double s = sign == ExchangeSign::symmetric ? 1.0 : -1.0;
    return rel * (direct + s * exchanged);
}

TwoBodyProduct two_body_symmetrized_product(const MacroOrbital& a, const MacroOrbital& b,
                                            ExchangeSign sign) {
    a.relative.validate();
    b.relative.validate();
    return {a, b, sign};
}

}  // namespace hcpair
