#pragma once

#include <complex>
#include <stdexcept>

#include "hcpair/units.hpp"
#include "hcpair/wavenumbers.hpp"

namespace hcpair {

// Relative-motion waveform families for the hard-core pair. All three share
// the squared density 2 sin^2(q x) except the A = 0 reference:
//   fermionic_odd      sqrt(2) sin(q x)    antisymmetric, node at contact
//   bosonic_even_cusp  sqrt(2) sin(q|x|)   symmetric with a cusp at contact
//   even_cosine        sqrt(2) cos(q x)    symmetric reference, no contact node
enum class SymmetryKind { fermionic_odd, bosonic_even_cusp, even_cosine };

struct RelativeWaveform {
    SymmetryKind symmetry = SymmetryKind::fermionic_odd;
    double q = 0.0;  // half relative momentum, k = 2q

    void validate() const {
        if (!(q > 0.0) || !std::isfinite(q))
            throw std::invalid_argument("RelativeWaveform: require finite q > 0");
    }
};

// Amplitude of the relative waveform at separation x. The sqrt(2) prefactor
// makes the density average to 1 over any whole number of half-wavelengths.
double relative_waveform_eval(const RelativeWaveform& w, double x);

// Probability density |zeta(x)|^2.
double relative_density(const RelativeWaveform& w, double x);

// Centre-of-mass factor for level N inside walls at +-L/2: sqrt(2/L) times
// cos(K_N X) for even N, sin(K_N X) for odd N. X outside the walls is an error.
double cm_waveform_eval(int N, double X, const BoxGeometry& g);

// Exchange channel of the symmetrized pair state.
enum class ExchangeSign { symmetric, antisymmetric };

// Two-particle plane-wave state (e^{i(k1 x1 + k2 x2)} +- e^{i(k2 x1 + k1 x2)}) / sqrt(2).
std::complex<double> pair_plane_wave_state(double k1, double k2, double x1, double x2,
                                           ExchangeSign sign);

// The same state written as (relative factor) * e^{iKX}. The antisymmetric
// channel carries an overall factor i from the sine decomposition; both
// channels agree with pair_plane_wave_state to round-off.
std::complex<double> factorized_pair_state(double k1, double k2, double x1, double x2,
                                           ExchangeSign sign);

// Pair correlation versus relative phase phi = k x: g(phi) = |zeta(phi/k)|^2.
// For both contact-node families this is 2 sin^2(phi/2), vanishing at phi = 0
// (particles can never be at the same point) and peaking at phi = pi.
double phase_correlation(const RelativeWaveform& w, double phi);

// Expectation of a contact (delta) potential of unit strength in the given
// waveform: zero for both families with a contact node. The even cosine
// reference has no contact node, so the hard-core limit does not apply to it
// and asking for the value is an error.
double expectation_delta_potential(const RelativeWaveform& w);

}  // namespace hcpair
