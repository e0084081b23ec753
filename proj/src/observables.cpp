#include "hcpair/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "hcpair/quadrature.hpp"

namespace hcpair {

namespace {

// Antiderivatives for density 2 sin^2(qx) (sign = -1) or 2 cos^2(qx) (+1):
//   integral of density        : x -+ sin(2qx)/(2q)
//   integral of x * density    : x^2/2 -+ [x sin(2qx)/(2q) + (cos(2qx)-1)/(4q^2)]
double density_integral(double q, double x, double sign) {
    return x + sign * std::sin(2.0 * q * x) / (2.0 * q);
}

double weighted_integral(double q, double x, double sign) {
    const double s2 = std::sin(2.0 * q * x);
    const double c2 = std::cos(2.0 * q * x);
    return 0.5 * x * x + sign * (x * s2 / (2.0 * q) + (c2 - 1.0) / (4.0 * q * q));
}

}  // namespace

ExpectationX expectation_x(const RelativeWaveform& w, double x_max) {
    w.validate();
    if (!(x_max > 0.0) || !std::isfinite(x_max))
        throw std::invalid_argument("expectation_x: domain [0, x_max] is empty");

    const double sign = w.symmetry == SymmetryKind::even_cosine ? 1.0 : -1.0;
    ExpectationX out;
    out.closed_form =
        weighted_integral(w.q, x_max, sign) / density_integral(w.q, x_max, sign);

    const auto density = [&](double x) { return relative_density(w, x); };
    const auto weighted = [&](double x) { return x * relative_density(w, x); };
    const double tol = 1e-10 * std::max(1.0, x_max);
    out.quadrature = integrate(weighted, 0.0, x_max, tol) / integrate(density, 0.0, x_max, tol);
    return out;
}

double mean_phase(const RelativeWaveform& w, double phi_max) {
    w.validate();
    if (!(phi_max > 0.0) || !std::isfinite(phi_max))
        throw std::invalid_argument("mean_phase: domain [0, phi_max] is empty");
    const auto g = [&](double phi) { return phase_correlation(w, phi); };
    const auto weighted = [&](double phi) { return phi * phase_correlation(w, phi); };
    const double tol = 1e-10 * std::max(1.0, phi_max);
    return integrate(weighted, 0.0, phi_max, tol) / integrate(g, 0.0, phi_max, tol);
}

ZeroPointForce zero_point_force(const BoxGeometry& g, const PhysicalUnits& u,
                                double step_factor) {
    u.validate();
    if (!(step_factor > 0.0) || !(step_factor < 0.1))
        throw std::invalid_argument("zero_point_force: step_factor must lie in (0, 0.1)");

    const double h = u.h();
    const double d = g.d();
    ZeroPointForce f;
    f.closed_form = h * h / (2.0 * u.mass * d * d * d);

    // Ground relative energy as a function of the half-span: E0(d) = h^2/(4 m d^2).
    const auto E0 = [&](double dd) { return h * h / (4.0 * u.mass * dd * dd); };
    const double step = step_factor * d;
    f.finite_difference = -(E0(d + step) - E0(d - step)) / (2.0 * step);
    f.relative_difference = std::abs(f.finite_difference - f.closed_form) / f.closed_form;
    return f;
}

}  // namespace hcpair
