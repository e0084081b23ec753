#pragma once

#include <string>
#include <vector>

#include "hcpair/units.hpp"

namespace hcpair::cli {

// One configuration drives every command. File keys mirror the field names;
// command-line flags override file values which override these defaults.
struct RunConfig {
    double L = 2.0;
    double hbar = 1.0;
    double mass = 1.0;
    double kB = 1.0;

    int npoints = 4001;  // odd default keeps a grid node at the contact point
    double w_factor = 2.0;
    std::vector<double> A_ladder{0.0, 1e1, 1e2, 1e3, 1e4, 1e5, 1e6};

    std::vector<double> alpha{0.5, 1.0, 1.5};
    double powerlaw_B = 1.0;
    double probe_k = 2.0;

    // Absolute temperatures; empty means the standard ladder
    // {0.01, 0.1, 1, 2, 5, 10, 100} * T0 for the configured box.
    std::vector<double> T_ladder;

    int n_max = 3;
    int N_max = 3;
    int loops = 2;  // half-wavelength loops in expectation domains

    // eigenfunction command controls
    std::string family = "relative";  // relative | cm | orbital
    int n_index = 0;
    int N_index = 0;
    int samples = 401;

    std::string format = "csv";  // csv | json-like
    std::string out = "-";
    bool deterministic = true;  // seedless algorithms only; must stay true

    BoxGeometry geometry() const { return BoxGeometry(L); }
    PhysicalUnits units() const { return {hbar, mass, kB}; }

    void validate() const;  // throws std::invalid_argument
};

// Flat key = value file, full-line or trailing '#' comments, lists separated
// by commas. Unknown keys are an error (catches typos early).
RunConfig parse_config_file(const std::string& path);

// Applies one key = value assignment (the file parser and the flag layer
// share this path).
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

// Ordered (key, value) echo of every field, values printed so a reparse
// reproduces the config bit for bit.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg);

// Temperatures the thermal command will actually run.
std::vector<double> resolved_T_ladder(const RunConfig& cfg);

}  // namespace hcpair::cli
