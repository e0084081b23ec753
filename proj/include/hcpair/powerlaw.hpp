#pragma once

#include <vector>

#include "hcpair/units.hpp"

namespace hcpair {

// Repulsive power-law tail V(x) = B x^{-(1+alpha)} probing how the contact
// expectation behaves when the hard core is softened.
struct PowerLawStrength {
    double B = 1.0;
    double alpha = 1.0;

    void validate() const;
};

// Integrand of the contact-energy integral, 2 B sin^2(k x / 2) / x^{1+alpha}.
// Small x behaves as (B k^2 / 2) x^{1-alpha}: integrable boundary for
// alpha < 1, constant for alpha = 1, divergent for alpha > 1.
double integrand_eval(const PowerLawStrength& p, double k, double x);

// Leading small-x form (B k^2 / 2) x^{1-alpha} of the integrand.
double integrand_small_x_form(const PowerLawStrength& p, double k, double x);

enum class ContactLimitKind { zero, finite, divergent };

// Contact-point limit of the integrand as x -> 0+.
struct ContactLimit {
    ContactLimitKind kind = ContactLimitKind::zero;
    double finite_value = 0.0;  // B k^2 / 2, set only for the alpha = 1 case
};

ContactLimit classify_limit(const PowerLawStrength& p, double k);

// Log-log slope of the integrand measured on a geometric x ladder. The fit
// uses only the asymptotic window k x < 1e-3, where the sin^2 factor has
// collapsed to its leading power and the slope equals 1 - alpha.
struct SlopeMeasurement {
    double slope = 0.0;
    int points_used = 0;
};

SlopeMeasurement measure_integrand_slope(const PowerLawStrength& p, double k,
                                         double x_hi = 1e-1, double x_lo = 1e-9,
                                         int points_per_decade = 2);

// For alpha = 1 the finite contact energy B k^2 / 2 adds to the relative
// kinetic energy, which is absorbed exactly by the reduced effective mass
// m* = m / (1 + 2 B m / hbar^2):  hbar^2 k^2 / 4 m* = hbar^2 k^2 / 4m + B k^2 / 2.
struct EffectiveMass {
    double m_star = 0.0;
    double enhancement = 0.0;  // m / m* = 1 + 2 B m / hbar^2
};

EffectiveMass effective_mass(double B, const PhysicalUnits& u);

// Relative kinetic energy of the pair, hbar^2 k^2 / 4 mass (reduced mass
// mass/2). Pass u.mass for the bare value or EffectiveMass::m_star for the
// contact-dressed one.
double relative_kinetic_energy(double k, double mass, const PhysicalUnits& u);

}  // namespace hcpair
