#pragma once

#include <complex>

#include "hcpair/units.hpp"
#include "hcpair/waveform.hpp"

namespace hcpair {

// Single-particle unit of the pair description: a standing relative wave
// riding on a centre-of-mass plane wave, xi(x, X) = B zeta_q(x) e^{iKX}.
// B normalizes the relative density over one exclusive half-loop [0, lambda/2].
struct MacroOrbital {
    RelativeWaveform relative;
    double K = 0.0;
    double norm_B = 0.0;
};

MacroOrbital make_macro_orbital(SymmetryKind symmetry, double q, double K);

std::complex<double> macro_orbital_eval(const MacroOrbital& mo, double x, double X);

// Checks that xi is an eigenstate of the one-unit operator
//   h = -(hbar^2/2m) d^2/dx^2 - (hbar^2/8m) d^2/dX^2
// with eigenvalue (E_k + E_K)/2, half the pair energy at (k = 2q, K): each of
// the two units carries half. The check applies the operator with second
// differences on an (nx, nX) grid spanning one relative wavelength and
// reports ||h xi - E xi|| / ||xi|| over interior points away from the cusp.
struct EigencheckResult {
    double eigenvalue = 0.0;  // (E_k + E_K)/2
    double residual = 0.0;    // energy units; < 1e-4 for a resolved grid
};

EigencheckResult paired_operator_eigencheck(const MacroOrbital& mo, const PhysicalUnits& u,
                                            int nx = 1001, int nX = 201);

// Symmetrized two-unit product state: B^2 zeta_{q1}(x1) zeta_{q2}(x2) times
// the +- symmetrized centre-of-mass phases. Exactly two permutation terms for
// two units; with q1 = q2 the antisymmetric channel vanishes at x1 = x2.
struct TwoBodyProduct {
    MacroOrbital a;
    MacroOrbital b;
    ExchangeSign sign = ExchangeSign::symmetric;

    std::complex<double> operator()(double x1, double X1, double x2, double X2) const;

    // Direct (identity) permutation term alone; the product state is
    // direct_term(...) +- direct_term with the CM phases exchanged.
    std::complex<double> direct_term(double x1, double X1, double x2, double X2) const;
};

TwoBodyProduct two_body_symmetrized_product(const MacroOrbital& a, const MacroOrbital& b,
                                            ExchangeSign sign);

}  // namespace hcpair
