// Command-line front end: quantized spectra, expectation values, barrier
// limit studies, thermal behavior and the cross-module selftest, emitted as
// plot-ready CSV or JSON tables.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcpair/cli/commands.hpp"
#include "hcpair/cli/selftest.hpp"
#include "hcpair/numeric/tridiagonal.hpp"
#include "hcpair/version.hpp"

namespace {

using hcpair::cli::RunConfig;

struct FlagCapture {
    CLI::Option* option = nullptr;
    std::string key;
    std::string value;
};

// Every flag funnels through the same key = value path as the config file,
// so parsing and validation live in one place.
FlagCapture* add_config_flag(CLI::App& app, std::vector<FlagCapture>& captures,
                             const std::string& flag, const std::string& key,
                             const std::string& help) {
    captures.push_back(FlagCapture{nullptr, key, {}});
    FlagCapture* cap = &captures.back();
    cap->option = app.add_option(flag, cap->value, help);
    return cap;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(hcpair::tool_name) +
                 " - two hard-core particles in a one-dimensional box"};
    app.require_subcommand(1);
    // Inherited by the subcommands, so global flags work after the
    // subcommand name: hcpair spectrum --format json-like.
    app.fallthrough();
    app.set_version_flag("--version", hcpair::tool_version);

    std::string config_path;
    app.add_option("--config", config_path, "flat key = value configuration file");

    // Reserve capacity: FlagCapture addresses must stay stable for CLI11.
    std::vector<FlagCapture> captures;
    captures.reserve(32);
    add_config_flag(app, captures, "--L", "L", "box span L (d = L/2)");
    add_config_flag(app, captures, "--hbar", "hbar", "reduced Planck constant");
    add_config_flag(app, captures, "--mass", "mass", "single-particle mass");
    add_config_flag(app, captures, "--kB", "kB", "Boltzmann constant");
    add_config_flag(app, captures, "--npoints", "npoints", "grid points for numeric solves");
    add_config_flag(app, captures, "--w-factor", "w_factor",
                    "barrier width in grid spacings (>= 2)");
    add_config_flag(app, captures, "--A-ladder", "A_ladder",
                    "comma list of barrier strengths, ascending");
    add_config_flag(app, captures, "--alpha", "alpha", "comma list of tail exponents");
    add_config_flag(app, captures, "--powerlaw-B", "powerlaw_B", "tail strength B");
    add_config_flag(app, captures, "--probe-k", "probe_k", "relative momentum probe k");
    add_config_flag(app, captures, "--T-ladder", "T_ladder",
                    "comma list of absolute temperatures");
    add_config_flag(app, captures, "--n-max", "n_max", "largest relative quantum number");
    add_config_flag(app, captures, "--N-max", "N_max", "largest centre-of-mass quantum number");
    add_config_flag(app, captures, "--format", "format", "output format: csv or json-like");
    add_config_flag(app, captures, "--out", "out", "output path, '-' for stdout");

    CLI::App* c_spectrum = app.add_subcommand("spectrum", "quantized pair levels E(n, N)");
    CLI::App* c_eigen = app.add_subcommand("eigenfunction", "sampled waveforms on a grid");
    add_config_flag(*c_eigen, captures, "--family", "family",
                    "waveform family: relative, cm or orbital");
    add_config_flag(*c_eigen, captures, "--n", "n_index", "relative quantum number");
    add_config_flag(*c_eigen, captures, "--N", "N_index", "centre-of-mass quantum number");
    add_config_flag(*c_eigen, captures, "--samples", "samples", "sample count");
    CLI::App* c_expect = app.add_subcommand("expectation", "mean separation and mean phase");
    add_config_flag(*c_expect, captures, "--loops", "loops",
                    "half-wavelength loops in the domain");
    CLI::App* c_delta = app.add_subcommand("delta-limit",
                                           "regularized contact barrier ladder");
    CLI::App* c_alpha = app.add_subcommand("alpha-scan", "power-law tail classification");
    CLI::App* c_thermal = app.add_subcommand("thermal", "Boltzmann occupation and wall force");
    CLI::App* c_force = app.add_subcommand("force", "zero-point force check");
    CLI::App* c_compare = app.add_subcommand("compare", "momentum enumeration schemes");
    CLI::App* c_selftest = app.add_subcommand("selftest", "run the full invariant suite");
    bool inject_bug = false;
    c_selftest
        ->add_flag("--inject-bug", inject_bug,
                   "de-tune the kinetic stencil (negative control; must fail)")
        ->group("");  // hidden from --help

    try {
        app.parse(argc, argv);

        RunConfig cfg;
        if (!config_path.empty()) cfg = hcpair::cli::parse_config_file(config_path);
        for (const FlagCapture& cap : captures)
            if (cap.option->count() > 0)
                hcpair::cli::apply_config_entry(cfg, cap.key, cap.value);
        cfg.validate();

        if (c_selftest->parsed()) {
            const hcpair::cli::SelftestReport report =
                hcpair::cli::run_invariant_suite(cfg, inject_bug ? 1.001 : 1.0);
            hcpair::cli::write_output(hcpair::cli::format_selftest_report(report), cfg.out);
            return report.all_pass ? 0 : 4;
        }

        hcpair::cli::ResultTable table;
        if (c_spectrum->parsed()) table = hcpair::cli::cmd_spectrum(cfg);
        else if (c_eigen->parsed()) table = hcpair::cli::cmd_eigenfunction(cfg);
        else if (c_expect->parsed()) table = hcpair::cli::cmd_expectation(cfg);
        else if (c_delta->parsed()) table = hcpair::cli::cmd_delta_limit(cfg);
        else if (c_alpha->parsed()) table = hcpair::cli::cmd_alpha_scan(cfg);
        else if (c_thermal->parsed()) table = hcpair::cli::cmd_thermal(cfg);
        else if (c_force->parsed()) table = hcpair::cli::cmd_force(cfg);
        else if (c_compare->parsed()) table = hcpair::cli::cmd_compare(cfg);
        else throw std::invalid_argument("no subcommand selected");

        hcpair::cli::write_output(hcpair::cli::render(table, cfg.format), cfg.out);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const hcpair::numeric::NonConvergenceError& e) {
        std::cerr << "error (non-convergence): " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (invalid config): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
