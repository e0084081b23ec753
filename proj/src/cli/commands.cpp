#include "hcpair/cli/commands.hpp"

#include <cmath>
#include <iostream>

#include "hcpair/macro_orbital.hpp"
#include "hcpair/numeric/delta_limit.hpp"
#include "hcpair/observables.hpp"
#include "hcpair/powerlaw.hpp"
#include "hcpair/spectrum.hpp"
#include "hcpair/thermal.hpp"
#include "hcpair/waveform.hpp"

namespace hcpair::cli {

namespace {

ResultTable make_table(const RunConfig& cfg, const std::string& command,
                       std::vector<ResultTable::Column> columns) {
    ResultTable t;
    t.command = command;
    t.columns = std::move(columns);
    t.embed_config(cfg);
    return t;
}

}  // namespace

ResultTable cmd_spectrum(const RunConfig& cfg) {
    cfg.validate();
    const BoxGeometry g = cfg.geometry();
    const PhysicalUnits u = cfg.units();

    ResultTable t = make_table(cfg, "spectrum",
                               {{"scheme", "1"},
                                {"n", "1"},
                                {"N", "1"},
                                {"q", "1/length"},
                                {"K", "1/length"},
                                {"E_k", "energy"},
                                {"E_K", "energy"},
                                {"E", "energy"},
                                {"E_over_eps0", "1"}});
    const NoninteractingReference ref = noninteracting_comparison(g, u);
    t.add_metadata("scheme_legend", "0 = interacting pair, 1 = free one-particle reference");
    t.add_metadata("eps0", ref.eps0);
    t.add_metadata("eps0_prime", ref.eps0_prime);
    t.add_metadata("energy_scale_ratio", ref.energy_ratio);
    t.add_metadata("momentum_scale_ratio", ref.momentum_ratio);

    for (int n = 0; n <= cfg.n_max; ++n) {
        for (int N = 0; N <= cfg.N_max; ++N) {
            const PairState s = energy_levels({n, N}, g, u);
            t.add_row({0.0, static_cast<double>(n), static_cast<double>(N), s.waves.q,
                       s.waves.K, s.E_k, s.E_K, s.E_total, s.E_over_eps0});
        }
    }
    // Free-particle reference: ground state of one particle spanning the
    // whole box; its E_over_eps0 of 1/4 restates eps0/eps0' = 4.
    t.add_row({1.0, 0.0, 0.0, ref.q0_prime, 0.0, ref.eps0_prime, 0.0, ref.eps0_prime,
               ref.eps0_prime / ref.eps0});
    return t;
}

ResultTable cmd_eigenfunction(const RunConfig& cfg) {
    cfg.validate();
    const BoxGeometry g = cfg.geometry();

    if (cfg.family == "relative") {
        const double q = quantized_q(cfg.n_index, g);
        const RelativeWaveform odd{SymmetryKind::fermionic_odd, q};
        const RelativeWaveform cusp{SymmetryKind::bosonic_even_cusp, q};
        const RelativeWaveform cosine{SymmetryKind::even_cosine, q};
        ResultTable t = make_table(cfg, "eigenfunction",
                                   {{"x", "length"},
                                    {"zeta_fermionic_odd", "1"},
                                    {"zeta_bosonic_cusp", "1"},
                                    {"zeta_cosine_reference", "1"}});
        t.add_metadata("family", "relative");
        t.add_metadata("q", q);
        const double lo = -g.d(), hi = g.d();
        for (int i = 0; i < cfg.samples; ++i) {
            const double x = lo + (hi - lo) * i / (cfg.samples - 1);
            t.add_row({x, relative_waveform_eval(odd, x), relative_waveform_eval(cusp, x),
                       relative_waveform_eval(cosine, x)});
        }
        return t;
    }

    if (cfg.family == "cm") {
        ResultTable t = make_table(cfg, "eigenfunction",
                                   {{"X", "length"}, {"chi_N", "1/sqrt(length)"}});
        t.add_metadata("family", "cm");
        t.add_metadata("K", quantized_K(cfg.N_index, g));
        const double half = 0.5 * g.L();
        for (int i = 0; i < cfg.samples; ++i) {
            const double X = -half + g.L() * i / (cfg.samples - 1);
            t.add_row({X, cm_waveform_eval(cfg.N_index, X, g)});
        }
        return t;
    }

    // family == "orbital": one macro-orbital along x at X = 0.
    const double q = quantized_q(cfg.n_index, g);
    const double K = quantized_K(cfg.N_index, g);
    const MacroOrbital mo = make_macro_orbital(SymmetryKind::fermionic_odd, q, K);
    ResultTable t = make_table(cfg, "eigenfunction",
                               {{"x", "length"},
                                {"re_xi", "1/sqrt(length)"},
                                {"im_xi", "1/sqrt(length)"},
                                {"abs_xi", "1/sqrt(length)"}});
    t.add_metadata("family", "orbital");
    t.add_metadata("q", q);
    t.add_metadata("K", K);
    t.add_metadata("norm_B", mo.norm_B);
    const double lambda = 2.0 * pi / q;
    for (int i = 0; i < cfg.samples; ++i) {
        const double x = lambda * i / (cfg.samples - 1);
        const std::complex<double> xi = macro_orbital_eval(mo, x, 0.0);
        t.add_row({x, xi.real(), xi.imag(), std::abs(xi)});
    }
    return t;
}

ResultTable cmd_expectation(const RunConfig& cfg) {
    cfg.validate();
    const BoxGeometry g = cfg.geometry();

    ResultTable t = make_table(cfg, "expectation",
                               {{"n", "1"},
                                {"q", "1/length"},
                                {"lambda", "length"},
                                {"x_max", "length"},
                                {"x_mean_closed", "length"},
                                {"x_mean_quadrature", "length"},
                                {"k_x_mean", "1"},
                                {"phi_max", "1"},
                                {"phi_mean", "1"}});
    t.add_metadata("domain", "x in [0, loops * lambda / 2], phase phi = k x");
    for (int n = 0; n <= cfg.n_max; ++n) {
        const double q = quantized_q(n, g);
        const RelativeWaveform w{SymmetryKind::fermionic_odd, q};
        const double lambda = 2.0 * pi / q;
        const double x_max = cfg.loops * 0.5 * lambda;
        const ExpectationX ex = expectation_x(w, x_max);
        const double phi_max = 2.0 * q * x_max;
        const double phi_mean = mean_phase(w, phi_max);
        t.add_row({static_cast<double>(n), q, lambda, x_max, ex.closed_form, ex.quadrature,
                   2.0 * q * ex.quadrature, phi_max, phi_mean});
    }
    return t;
}

ResultTable cmd_delta_limit(const RunConfig& cfg) {
    cfg.validate();
    const BoxGeometry g = cfg.geometry();
    const PhysicalUnits u = cfg.units();

    numeric::DeltaLimitOptions opt;
    opt.npoints = cfg.npoints;
    opt.width_factor = cfg.w_factor;
    const std::vector<numeric::DeltaLimitRow> rows =
        numeric::delta_limit_study(cfg.A_ladder, g, u, opt);

    ResultTable t = make_table(cfg, "delta-limit",
                               {{"A", "energy*length"},
                                {"is_reference", "1"},
                                {"eta0_abs", "1/sqrt(length)"},
                                {"l2_dist", "1"},
                                {"V_expect", "energy"},
                                {"E0", "energy"},
                                {"E0_over_2eps0", "1"}});
    t.add_metadata("is_reference_legend", "1 = barrier-free cosine reference row (A = 0)");
    t.add_metadata("two_eps0", 2.0 * ground_energy_scale(g, u));
    bool has_tail = false;
    for (const auto& r : rows)
        if (r.A > 0.0 && r.V_expect > 0.0) has_tail = true;
    if (has_tail)
        t.add_metadata("v_expect_tail_slope", numeric::v_expect_slope(rows));
    for (const auto& r : rows)
        t.add_row({r.A, r.A == 0.0 ? 1.0 : 0.0, r.eta0_abs, r.l2_dist, r.V_expect, r.E0,
                   r.E0_over_2eps0});
    return t;
}

ResultTable cmd_alpha_scan(const RunConfig& cfg) {
    cfg.validate();

    ResultTable t = make_table(cfg, "alpha-scan",
                               {{"alpha", "1"},
                                {"regime", "1"},
                                {"finite_value", "energy"},
                                {"slope_measured", "1"},
                                {"slope_expected", "1"},
                                {"points_used", "1"}});
    t.add_metadata("regime_legend", "0 = zero limit, 1 = finite, 2 = divergent");
    t.add_metadata("probe_k", cfg.probe_k);
    t.add_metadata("B", cfg.powerlaw_B);
    for (double a : cfg.alpha) {
        if (!(a > 0.0) || !std::isfinite(a)) {
            std::cerr << "alpha-scan: rejected alpha = " << a
                      << " (exponent must be finite and > 0)\n";
            continue;
        }
        const PowerLawStrength p{cfg.powerlaw_B, a};
        const ContactLimit limit = classify_limit(p, cfg.probe_k);
        const SlopeMeasurement slope = measure_integrand_slope(p, cfg.probe_k);
        t.add_row({a, static_cast<double>(limit.kind), limit.finite_value, slope.slope,
                   1.0 - a, static_cast<double>(slope.points_used)});
    }
    if (t.rows.empty())
        throw std::invalid_argument("alpha-scan: no valid alpha values in the list");
    return t;
}

ResultTable cmd_thermal(const RunConfig& cfg) {
    cfg.validate();
    const BoxGeometry g = cfg.geometry();
    const PhysicalUnits u = cfg.units();
    const double T0 = characteristic_temperature(g, u);
    const double F0 = zero_point_force(g, u).closed_form;

    ResultTable t = make_table(cfg, "thermal",
                               {{"T", "temperature"},
                                {"T_over_T0", "1"},
                                {"P0", "1"},
                                {"P1_over_P0", "1"},
                                {"F_thermal", "force"},
                                {"F_over_F0", "1"}});
    t.add_metadata("T0", T0);
    t.add_metadata("F0", F0);
    for (double T : resolved_T_ladder(cfg)) {
        if (!(T > 0.0)) {
            std::cerr << "thermal: rejected T = " << T << " (temperature must be > 0)\n";
            continue;
        }
        const ThermalOccupation occ = occupations(T, g, u);
        const double F = thermal_force(T, g, u);
        t.add_row({T, T / T0, occ.probabilities[0],
                   occ.probabilities[1] / occ.probabilities[0], F, F / F0});
    }
    if (t.rows.empty())
        throw std::invalid_argument("thermal: no valid temperatures in the ladder");
    return t;
}

ResultTable cmd_force(const RunConfig& cfg) {
    cfg.validate();
    const PhysicalUnits u = cfg.units();

    ResultTable t = make_table(cfg, "force",
                               {{"d", "length"},
                                {"F_closed", "force"},
                                {"F_central_diff", "force"},
                                {"rel_difference", "1"},
                                {"F_times_2md3_over_h2", "1"}});
    const double h = u.h();
    for (double scale : {0.5, 1.0, 2.0}) {
        const BoxGeometry g(scale * cfg.L);
        const ZeroPointForce f = zero_point_force(g, u);
        const double d3 = g.d() * g.d() * g.d();
        t.add_row({g.d(), f.closed_form, f.finite_difference, f.relative_difference,
                   f.closed_form * 2.0 * u.mass * d3 / (h * h)});
    }
    return t;
}

ResultTable cmd_compare(const RunConfig& cfg) {
    cfg.validate();
    const BoxGeometry g = cfg.geometry();
    const SpectrumComparison cmp = spectrum_compare(cfg.n_max, cfg.N_max, g);
    const double unit = pi / g.L();

    ResultTable t = make_table(cfg, "compare",
                               {{"scheme", "1"},
                                {"i1", "1"},
                                {"i2", "1"},
                                {"k1_over_unit", "1"},
                                {"k2_over_unit", "1"},
                                {"is_ground", "1"}});
    t.add_metadata("scheme_legend",
                   "0 = interacting pair (n, N), 1 = integer plane-wave (s1, s2), "
                   "2 = free one-particle reference");
    t.add_metadata("momentum_unit_pi_over_L", unit);
    const auto emit = [&](double scheme, const MomentumPair& p, bool ground) {
        t.add_row({scheme, static_cast<double>(p.i1), static_cast<double>(p.i2),
                   p.k1 / unit, p.k2 / unit, ground ? 1.0 : 0.0});
    };
    for (const auto& p : cmp.interacting)
        emit(0.0, p, p.i1 == cmp.interacting_ground.i1 && p.i2 == cmp.interacting_ground.i2);
    for (const auto& p : cmp.integer_grid)
        emit(1.0, p, p.i1 == cmp.integer_ground.i1 && p.i2 == cmp.integer_ground.i2);
    emit(2.0, cmp.free_ground, true);
    return t;
}

}  // namespace hcpair::cli
