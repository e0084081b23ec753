#include "hcpair/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace hcpair {

double quantized_q(int n, const BoxGeometry& g) {
    if (n < 0) throw std::invalid_argument("quantized_q: n must be >= 0");
    return (n + 1) * pi / g.d();
}

double quantized_K(int N, const BoxGeometry& g) {
    if (N < 0) throw std::invalid_argument("quantized_K: N must be >= 0");
    return (N + 1) * pi / g.L();
}

PairState energy_levels(const PairQuantumNumbers& numbers, const BoxGeometry& g,
                        const PhysicalUnits& u) {
    numbers.validate();
    u.validate();
    PairState s;
    s.numbers = numbers;
    s.waves = decompose_momenta(quantized_q(numbers.n, g), quantized_K(numbers.N, g));
    const double c = u.hbar * u.hbar / (4.0 * u.mass);
    s.E_k = c * s.waves.k * s.waves.k;
    s.E_K = c * s.waves.K * s.waves.K;
    s.E_total = s.E_k + s.E_K;
    const double n1 = numbers.n + 1;
    const double N1 = numbers.N + 1;
    s.E_over_eps0 = (16.0 * n1 * n1 + N1 * N1) / 8.0;
    return s;
}

NoninteractingReference noninteracting_comparison(const BoxGeometry& g, const PhysicalUnits& u) {
    NoninteractingReference r;
    r.eps0 = ground_energy_scale(g, u);
    r.eps0_prime = noninteracting_energy_scale(g, u);
    r.q0 = pi / g.d();
    r.q0_prime = pi / g.L();
    r.energy_ratio = r.eps0 / r.eps0_prime;
    r.momentum_ratio = r.q0 / r.q0_prime;
    return r;
}

SpectrumComparison spectrum_compare(int n_max, int N_max, const BoxGeometry& g) {
    if (n_max < 0 || N_max < 0)
        throw std::invalid_argument("spectrum_compare: bounds must be >= 0");
    SpectrumComparison cmp;
    cmp.interacting.reserve(static_cast<std::size_t>(n_max + 1) * (N_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        const double q = quantized_q(n, g);
        for (int N = 0; N <= N_max; ++N) {
            const WaveNumbers w = decompose_momenta(q, quantized_K(N, g));
            cmp.interacting.push_back({n, N, w.k1, w.k2});
        }
    }
    cmp.integer_grid.reserve(cmp.interacting.size());
    const double unit = pi / g.L();
    for (int s1 = 1; s1 <= n_max + 1; ++s1)
        for (int s2 = 1; s2 <= N_max + 1; ++s2)
            cmp.integer_grid.push_back({s1, s2, -s1 * unit, s2 * unit});
    cmp.interacting_ground = cmp.interacting.front();
    cmp.integer_ground = cmp.integer_grid.front();
    cmp.free_ground = {1, 1, -unit, unit};
    return cmp;
}

bool hc_validity_check(double q, double sigma) {
    if (sigma < 0.0 || !std::isfinite(sigma))
        throw std::invalid_argument("hc_validity_check: sigma must be finite and >= 0");
    if (!(q >= 0.0) || !std::isfinite(q))
        throw std::invalid_argument("hc_validity_check: q must be finite and >= 0");
    if (sigma == 0.0) return true;
    return q <= 2.0 * pi / sigma;
}

}  // namespace hcpair
