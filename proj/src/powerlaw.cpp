#include "hcpair/powerlaw.hpp"

#include <cmath>
#include <stdexcept>

namespace hcpair {

void PowerLawStrength::validate() const {
    if (!(B > 0.0) || !std::isfinite(B))
        throw std::invalid_argument("PowerLawStrength: B must be finite and > 0");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("PowerLawStrength: alpha must be finite and > 0");
}

double integrand_eval(const PowerLawStrength& p, double k, double x) {
    p.validate();
    if (!(x > 0.0))
        throw std::invalid_argument("integrand_eval: x must be > 0");
    const double s = std::sin(0.5 * k * x);
    return 2.0 * p.B * s * s / std::pow(x, 1.0 + p.alpha);
}

double integrand_small_x_form(const PowerLawStrength& p, double k, double x) {
    p.validate();
    if (!(x > 0.0))
        throw std::invalid_argument("integrand_small_x_form: x must be > 0");
    return 0.5 * p.B * k * k * std::pow(x, 1.0 - p.alpha);
}

ContactLimit classify_limit(const PowerLawStrength& p, double k) {
    p.validate();
    if (p.alpha < 1.0) return {ContactLimitKind::zero, 0.0};
    if (p.alpha == 1.0) return {ContactLimitKind::finite, 0.5 * p.B * k * k};
    return {ContactLimitKind::divergent, 0.0};
}

SlopeMeasurement measure_integrand_slope(const PowerLawStrength& p, double k, double x_hi,
                                         double x_lo, int points_per_decade) {
    p.validate();
    if (!(k > 0.0)) throw std::invalid_argument("measure_integrand_slope: k must be > 0");
    if (!(x_lo > 0.0) || !(x_hi > x_lo))
        throw std::invalid_argument("measure_integrand_slope: need 0 < x_lo < x_hi");
    if (points_per_decade < 1)
        throw std::invalid_argument("measure_integrand_slope: points_per_decade must be >= 1");

    const double decades = std::log10(x_hi / x_lo);
    const int n = std::max(2, static_cast<int>(std::round(decades * points_per_decade)) + 1);

    // Collect the ladder, then fit only inside the asymptotic window where
    // sin^2(kx/2) ~ (kx/2)^2; outside it the local slope still carries the
    // oscillatory factor and the comparison with 1 - alpha is meaningless.
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<double, double>> all;
    for (int i = 0; i < n; ++i) {
        const double x = x_hi * std::pow(x_lo / x_hi, static_cast<double>(i) / (n - 1));
        const double f = integrand_eval(p, k, x);
        if (!(f > 0.0)) continue;
        all.emplace_back(std::log10(x), std::log10(f));
        if (k * x < 1e-3) pts.emplace_back(all.back());
    }
    if (pts.size() < 3) {
        const std::size_t take = std::min<std::size_t>(4, all.size());
        if (take < 2)
            throw std::invalid_argument("measure_integrand_slope: ladder left no usable points");
        pts.assign(all.end() - take, all.end());
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    return {(m * sxy - sx * sy) / (m * sxx - sx * sx), static_cast<int>(pts.size())};
}

EffectiveMass effective_mass(double B, const PhysicalUnits& u) {
    u.validate();
    if (B < 0.0 || !std::isfinite(B))
        throw std::invalid_argument("effective_mass: B must be finite and >= 0");
    EffectiveMass em;
    em.enhancement = 1.0 + 2.0 * B * u.mass / (u.hbar * u.hbar);
    em.m_star = u.mass / em.enhancement;
    return em;
}

double relative_kinetic_energy(double k, double mass, const PhysicalUnits& u) {
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw std::invalid_argument("relative_kinetic_energy: mass must be > 0");
    return u.hbar * u.hbar * k * k / (4.0 * mass);
}

}  // namespace hcpair
