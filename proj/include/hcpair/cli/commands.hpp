#pragma once

#include "hcpair/cli/table.hpp"

namespace hcpair::cli {

// Quantized pair levels with energies and the free-particle reference row.
ResultTable cmd_spectrum(const RunConfig& cfg);

// Sampled waveforms: relative families, centre-of-mass factor, or one
// macro-orbital, selected by cfg.family.
ResultTable cmd_eigenfunction(const RunConfig& cfg);

// Mean separation and mean phase per level over node-aligned domains.
ResultTable cmd_expectation(const RunConfig& cfg);

// Regularized-contact ladder: approach to the hard-core limit.
ResultTable cmd_delta_limit(const RunConfig& cfg);

// Power-law tail classification and measured integrand slopes.
ResultTable cmd_alpha_scan(const RunConfig& cfg);

// Boltzmann occupation and thermal wall force over a temperature ladder.
ResultTable cmd_thermal(const RunConfig& cfg);

// Zero-point force: closed form vs central difference over a span ladder.
ResultTable cmd_force(const RunConfig& cfg);

// Momentum enumeration schemes side by side, in units of pi/L.
ResultTable cmd_compare(const RunConfig& cfg);

}  // namespace hcpair::cli
