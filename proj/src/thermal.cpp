#include "hcpair/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "hcpair/spectrum.hpp"

namespace hcpair {

namespace {

void check_temperature(double T) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::invalid_argument("thermal: temperature must be finite and > 0");
}

int resolve_cutoff(std::optional<int> requested, double T, const BoxGeometry& g,
                   const PhysicalUnits& u) {
    if (!requested) return suggested_cutoff(T, g, u);
    if (*requested < 0) throw std::invalid_argument("thermal: n_cutoff must be >= 0");
    return *requested;
}

}  // namespace

double characteristic_temperature(const BoxGeometry& g, const PhysicalUnits& u) {
    return ground_energy_scale(g, u) / u.kB;
}

int suggested_cutoff(double T, const BoxGeometry& g, const PhysicalUnits& u) {
    check_temperature(T);
    // Drop the ladder once 2 ((n+1)^2 - 1) eps0 / kB T > 12 ln 10.
    const double theta = ground_energy_scale(g, u) / (u.kB * T);
    const double n1 = std::sqrt(1.0 + 12.0 * std::log(10.0) / (2.0 * theta));
    return std::max(20, static_cast<int>(std::ceil(n1)) + 1);
}

ThermalOccupation occupations(double T, const BoxGeometry& g, const PhysicalUnits& u,
                              std::optional<int> n_cutoff) {
    check_temperature(T);
    const int cutoff = resolve_cutoff(n_cutoff, T, g, u);
    const double theta = ground_energy_scale(g, u) / (u.kB * T);

    ThermalOccupation occ;
    occ.T = T;
    occ.n_cutoff = cutoff;
    occ.probabilities.resize(cutoff + 1);
    double norm = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        const double n1 = static_cast<double>(n + 1);
        const double w = std::exp(-2.0 * (n1 * n1 - 1.0) * theta);
        occ.probabilities[n] = w;
        norm += w;
    }
    for (double& p : occ.probabilities) p /= norm;
    return occ;
}

ThermalOccupation occupations_with_cm(double T, const BoxGeometry& g, const PhysicalUnits& u,
                                      std::optional<int> n_cutoff) {
    check_temperature(T);
    const int cutoff = resolve_cutoff(n_cutoff, T, g, u);
    const double beta = 1.0 / (u.kB * T);
    const double E00 = energy_levels({0, 0}, g, u).E_total;

    // Centre-of-mass ladder: quarter-scale spacing, same 1e-12 tail rule.
    const double thetaK = noninteracting_energy_scale(g, u) * beta;
    const int N_cut =
        std::max(20, static_cast<int>(std::ceil(std::sqrt(1.0 + 12.0 * std::log(10.0) / thetaK))) + 1);

    ThermalOccupation occ;
    occ.T = T;
    occ.n_cutoff = cutoff;
    occ.probabilities.resize(cutoff + 1);
    double norm = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        double marginal = 0.0;
        for (int N = 0; N <= N_cut; ++N) {
            const PairState s = energy_levels({n, N}, g, u);
            marginal += std::exp(-(s.E_total - E00) * beta);
        }
        occ.probabilities[n] = marginal;
        norm += marginal;
    }
    for (double& p : occ.probabilities) p /= norm;
    return occ;
}

double thermal_force(double T, const BoxGeometry& g, const PhysicalUnits& u,
                     std::optional<int> n_cutoff) {
    const ThermalOccupation occ = occupations(T, g, u, n_cutoff);
    const double h = u.h();
    const double d = g.d();
    const double F0 = h * h / (2.0 * u.mass * d * d * d);
    double scaled = 0.0;
    for (int n = 0; n <= occ.n_cutoff; ++n) {
        const double n1 = static_cast<double>(n + 1);
        scaled += occ.probabilities[n] * n1 * n1;
    }
    return F0 * scaled;
}

GroundEnergyShares km_energy_share(const BoxGeometry& g, const PhysicalUnits& u) {
    const PairState s = energy_levels({0, 0}, g, u);
    GroundEnergyShares shares;
    shares.E_K = s.E_K;
    shares.E_k = s.E_k;
    shares.E_total = s.E_total;
    // Ratios via the dyadic formula E/eps0 = [16 (n+1)^2 + (N+1)^2] / 8 at
    // n = N = 0: the K term contributes 1/8, the k term 16/8. Both shares and
    // their quotient are exact in floating point.
    const double K_part = 1.0 / 8.0;
    shares.K_share_of_eps0 = K_part;
    shares.k_share_of_eps0 = s.E_over_eps0 - K_part;        // 17/8 - 1/8 = 2
    shares.K_share_of_total = K_part / s.E_over_eps0;       // (1/8)/(17/8) = 1/17
    return shares;
}

}  // namespace hcpair
