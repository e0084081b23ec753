#pragma once

#include <optional>
#include <vector>

#include "hcpair/units.hpp"

namespace hcpair {

// Temperature scale of the relative ladder: T0 = eps0 / kB.
double characteristic_temperature(const BoxGeometry& g, const PhysicalUnits& u);

// Boltzmann occupation of the relative ladder at temperature T. Levels are
// weighted by exp(-(E_k(n) - E_k(0)) / kB T); with E_k(n) = 2 eps0 (n+1)^2
// the exponent is -2 ((n+1)^2 - 1) eps0 / kB T. At T = T0 the first excited
// weight is exactly e^{-6}.
struct ThermalOccupation {
    double T = 0.0;
    int n_cutoff = 0;                  // highest n included
    std::vector<double> probabilities; // normalized, size n_cutoff + 1
};

// Cutoff high enough that the first dropped weight is below 1e-12.
int suggested_cutoff(double T, const BoxGeometry& g, const PhysicalUnits& u);

ThermalOccupation occupations(double T, const BoxGeometry& g, const PhysicalUnits& u,
                              std::optional<int> n_cutoff = std::nullopt);

// As above but weighting full pair levels E(n, N): the centre-of-mass ladder
// is summed out (to its own 1e-12 tail) and the result marginalized over N.
// The relative ladder dominates, so this barely shifts the probabilities.
ThermalOccupation occupations_with_cm(double T, const BoxGeometry& g, const PhysicalUnits& u,
                                      std::optional<int> n_cutoff = std::nullopt);

// Thermal average of the wall force over the relative ladder. Each level
// pushes with (n+1)^2 times the ground force h^2 / 2 m d^3, so the average
// is that scale times sum P_n (n+1)^2: monotone non-decreasing in T and
// equal to the zero-point force at T -> 0.
double thermal_force(double T, const BoxGeometry& g, const PhysicalUnits& u,
                     std::optional<int> n_cutoff = std::nullopt);

// Energy split of the ground pair between centre-of-mass and relative
// motion. The ratio fields come from the exact dyadic formula
// E(n,N)/eps0 = [16 (n+1)^2 + (N+1)^2] / 8, so they are exact:
// E_K/eps0 = 1/8, E_k/eps0 = 2, E_K/E_total = 1/17.
struct GroundEnergyShares {
    double E_K = 0.0;
    double E_k = 0.0;
    double E_total = 0.0;
    double K_share_of_eps0 = 0.0;   // exactly 1/8
    double k_share_of_eps0 = 0.0;   // exactly 2
    double K_share_of_total = 0.0;  // exactly 1/17
};

GroundEnergyShares km_energy_share(const BoxGeometry& g, const PhysicalUnits& u);

}  // namespace hcpair
