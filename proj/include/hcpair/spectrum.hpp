#pragma once

#include <vector>

#include "hcpair/units.hpp"
#include "hcpair/wavenumbers.hpp"

namespace hcpair {

// Quantized half relative momentum: q_n = (n+1) pi / d. The hard-core pair
// behaves like a single particle of span d = L/2 in relative motion.
double quantized_q(int n, const BoxGeometry& g);

// Quantized centre-of-mass momentum: K_N = (N+1) pi / L.
double quantized_K(int N, const BoxGeometry& g);

// One fully resolved pair level.
struct PairState {
    PairQuantumNumbers numbers;
    WaveNumbers waves;
    double E_k = 0.0;      // relative share, hbar^2 k^2 / 4m
    double E_K = 0.0;      // centre-of-mass share, hbar^2 K^2 / 4m
    double E_total = 0.0;  // E_k + E_K, additive by construction
    // E_total / eps0 as the exact dyadic rational [16(n+1)^2 + (N+1)^2] / 8,
    // so ratio checks are immune to round-off in the dimensionful route.
    double E_over_eps0 = 0.0;
};

PairState energy_levels(const PairQuantumNumbers& numbers, const BoxGeometry& g,
                        const PhysicalUnits& u);

// Scales of the interacting pair against one non-interacting particle in the
// full box: energy ratio eps0/eps0' = 4 and momentum ratio q0/q0' = 2, both
// exact because L = 2d.
struct NoninteractingReference {
    double eps0 = 0.0;        // h^2 / 8 m d^2
    double eps0_prime = 0.0;  // h^2 / 8 m L^2
    double q0 = 0.0;          // pi / d
    double q0_prime = 0.0;    // pi / L
    double energy_ratio = 0.0;
    double momentum_ratio = 0.0;
};

NoninteractingReference noninteracting_comparison(const BoxGeometry& g, const PhysicalUnits& u);

// Single-particle momentum pair in one enumeration scheme. i1, i2 are that
// scheme's indices; k1 <= k2 by construction of the schemes below.
struct MomentumPair {
    int i1 = 0;
    int i2 = 0;
    double k1 = 0.0;
    double k2 = 0.0;
};

// Side-by-side enumeration of pair momenta in units of pi/L.
//   * interacting scheme: k1 = -q_n + K_N/2, k2 = q_n + K_N/2. Ground state
//     (-3/2, 5/2) pi/L; entries are half-integer or integer multiples.
//   * integer scheme: k1 = -s1 pi/L, k2 = s2 pi/L with s1, s2 >= 1, the
//     symmetrized-plane-wave book-keeping. Ground state (-1, 1) pi/L.
//   * free ground state: one particle in the whole box at +-pi/L.
struct SpectrumComparison {
    std::vector<MomentumPair> interacting;    // indexed by (n, N)
    std::vector<MomentumPair> integer_grid;   // indexed by (s1, s2)
    MomentumPair interacting_ground;
    MomentumPair integer_ground;
    MomentumPair free_ground;
};

SpectrumComparison spectrum_compare(int n_max, int N_max, const BoxGeometry& g);

// Hard-core admissibility of a relative momentum against particle size sigma:
// the description holds while lambda/2 >= sigma, i.e. q <= 2 pi / sigma.
// Point particles (sigma = 0) are always admissible.
bool hc_validity_check(double q, double sigma);

}  // namespace hcpair
