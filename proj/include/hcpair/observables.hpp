#pragma once

#include "hcpair/units.hpp"
#include "hcpair/waveform.hpp"

namespace hcpair {

// Density-weighted mean separation over [0, x_max], computed two independent
// ways. For a domain holding a whole number of half-wavelengths both give
// x_max / 2; in particular [0, lambda] gives lambda/2 = d for the ground pair.
struct ExpectationX {
    double closed_form = 0.0;
    double quadrature = 0.0;
};

ExpectationX expectation_x(const RelativeWaveform& w, double x_max);

// Mean relative phase <phi> over [0, phi_max] weighted by the pair
// correlation g(phi). Node-aligned domains (phi_max a multiple of 2 pi)
// give phi_max / 2, so one wavelength carries <phi> = 2 pi.
double mean_phase(const RelativeWaveform& w, double phi_max);

// Zero-point force of the pair ground state on the enclosure. The closed form
// -dE(0)/dd = h^2 / (2 m d^3) is checked against a central difference of the
// ground energy; relative_difference ~ 2 (step_factor)^2.
struct ZeroPointForce {
    double closed_form = 0.0;
    double finite_difference = 0.0;
    double relative_difference = 0.0;
};

ZeroPointForce zero_point_force(const BoxGeometry& g, const PhysicalUnits& u,
                                double step_factor = 1e-5);

}  // namespace hcpair
