#include "hcpair/cli/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "hcpair/cli/commands.hpp"
#include "hcpair/macro_orbital.hpp"
#include "hcpair/numeric/delta_limit.hpp"
#include "hcpair/observables.hpp"
#include "hcpair/powerlaw.hpp"
#include "hcpair/spectrum.hpp"
#include "hcpair/thermal.hpp"
#include "hcpair/waveform.hpp"

namespace hcpair::cli {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

class Suite {
public:
    void check(const std::string& name, double measured, double bound,
               const std::string& op) {
        SelftestItem item{name, measured, bound, op, false};
        if (op == "<=") item.pass = measured <= bound;
        else if (op == ">=") item.pass = measured >= bound;
        else if (op == ">") item.pass = measured > bound;
        else if (op == "==") item.pass = measured == bound;
        else throw std::logic_error("Suite: unknown comparison " + op);
        items.push_back(std::move(item));
    }

    std::vector<SelftestItem> items;
};

double rel_err(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

SelftestReport run_invariant_suite(const RunConfig& cfg, double stencil_scale) {
    cfg.validate();
    const auto t_start = clock_type::now();
    const BoxGeometry g = cfg.geometry();
    const PhysicalUnits u = cfg.units();
    const double eps0 = ground_energy_scale(g, u);
    Suite s;

    // 1. Ground-state energy ratio.
    {
        const PairState gs = energy_levels({0, 0}, g, u);
        s.check("c01_ground_ratio_dyadic", std::abs(gs.E_over_eps0 - 2.125), 0.0, "<=");
        s.check("c01_ground_ratio_dimensionful", std::abs(gs.E_total / eps0 - 2.125), 1e-13,
                "<=");
        s.check("c01_matches_rounded_2p12", std::abs(gs.E_total / eps0 - 2.12), 5.1e-3, "<=");
    }

    // 2. Momentum anchors.
    {
        const PairState gs = energy_levels({0, 0}, g, u);
        const double unit = pi / g.L();
        s.check("c02_q0_times_d_over_pi", std::abs(quantized_q(0, g) * g.d() / pi - 1.0),
                1e-14, "<=");
        s.check("c02_K0_times_L_over_pi", std::abs(quantized_K(0, g) * g.L() / pi - 1.0),
                1e-14, "<=");
        s.check("c02_ground_k1_is_minus_3_halves", std::abs(gs.waves.k1 / unit + 1.5), 1e-13,
                "<=");
        s.check("c02_ground_k2_is_5_halves", std::abs(gs.waves.k2 / unit - 2.5), 1e-13, "<=");
    }

    // 3. Numeric spectrum against the closed form.
    {
        const auto t3 = clock_type::now();
        numeric::StencilOptions stencil;
        stencil.off_diag_scale = stencil_scale;
        const auto rows = numeric::box_spectrum_numeric(g, u, 4, 4000,
                                                        numeric::MidpointRule::node_filter,
                                                        stencil);
        double max_rel = 0.0;
        for (const auto& row : rows) {
            const double q_exact = quantized_q(row.n, g);
            const double E_exact = u.hbar * u.hbar * q_exact * q_exact / u.mass;
            max_rel = std::max(max_rel, rel_err(row.E, E_exact));
        }
        s.check("c03_numeric_spectrum_max_rel_err", max_rel, 1e-3, "<=");

        const auto barrier_rows = numeric::box_spectrum_numeric(
            g, u, 4, cfg.npoints, numeric::MidpointRule::center_barrier, stencil);
        double max_rel_b = 0.0;
        for (const auto& row : barrier_rows) {
            const double q_exact = quantized_q(row.n, g);
            const double E_exact = u.hbar * u.hbar * q_exact * q_exact / u.mass;
            max_rel_b = std::max(max_rel_b, rel_err(row.E, E_exact));
        }
        s.check("c03_center_barrier_crosscheck", max_rel_b, 1e-3, "<=");

        s.check("c03_convergence_order",
                std::abs(numeric::eigenvalue_convergence_order(g, u) - 2.0), 0.2, "<=");

        // Midpoint-node bookkeeping: on [0, L] the Dirichlet level s (1-based)
        // has a midpoint node exactly when s is even.
        const numeric::Grid grid = numeric::make_grid(0.0, g.L(), 4000);
        const auto V0 = [](double) { return 0.0; };
        const auto sol = numeric::solve_lowest_states(grid, V0, u, 8);
        int mismatches = 0;
        for (int j = 0; j < 8; ++j) {
            const auto& v = sol.eigenvectors[j];
            double vmax = 0.0;
            for (double x : v) vmax = std::max(vmax, std::abs(x));
            const bool has_node =
                std::abs(numeric::value_at(v, grid, 0.5 * g.L())) < 0.05 * vmax;
            if (has_node != (j % 2 == 1)) ++mismatches;
        }
        s.check("c03_no_node_means_odd_level", static_cast<double>(mismatches), 0.0, "==");
        s.check("c03_runtime_seconds", seconds_since(t3), 10.0, "<=");
    }

    // 4. Regularized contact barrier approaching the hard core.
    {
        const auto t4 = clock_type::now();
        numeric::DeltaLimitOptions opt;
        opt.npoints = cfg.npoints;
        opt.width_factor = cfg.w_factor;
        opt.stencil.off_diag_scale = stencil_scale;
        const auto rows = numeric::delta_limit_study(cfg.A_ladder, g, u, opt);

        double min_decrease = std::numeric_limits<double>::infinity();
        const numeric::DeltaLimitRow* prev = nullptr;
        for (const auto& row : rows) {
            if (row.A <= 0.0) continue;
            if (prev) min_decrease = std::min(min_decrease, prev->eta0_abs - row.eta0_abs);
            prev = &row;
        }
        s.check("c04_eta0_strictly_decreasing", min_decrease, 0.0, ">");
        s.check("c04_l2_dist_last", rows.back().l2_dist, 1e-3, "<=");
        s.check("c04_v_expect_tail_slope", std::abs(numeric::v_expect_slope(rows) + 1.0),
                0.1, "<=");
        s.check("c04_E0_ratio_last", std::abs(rows.back().E0_over_2eps0 - 1.0), 1e-3, "<=");

        const numeric::Grid grid = numeric::make_grid(-g.d(), g.d(), 1001);
        const numeric::RegularizedDelta barrier{100.0, 2.0 * grid.spacing};
        const double half_w = 0.5 * barrier.width * (1.0 - 1e-9);
        const double height = barrier.strength / barrier.width;
        const auto V = [half_w, height](double x) { return std::abs(x) < half_w ? height : 0.0; };
        const auto sol = numeric::solve_lowest_states(grid, V, u, 4);
        double max_defect = 0.0, max_resid = 0.0;
        for (int j = 0; j < 4; ++j) {
            max_defect = std::max(max_defect, numeric::parity_defect(sol.eigenvectors[j]));
            max_resid = std::max(max_resid, sol.residuals[j]);
        }
        s.check("c04_parity_defect_max", max_defect, 1e-8, "<=");
        s.check("c04_eigen_residual_max", max_resid, 1e-8, "<=");
        s.check("c04_runtime_seconds", seconds_since(t4), 30.0, "<=");
    }

    // 5. Mean separation and mean phase.
    {
        const double q0 = quantized_q(0, g);
        const RelativeWaveform w0{SymmetryKind::fermionic_odd, q0};
        const double lambda0 = 2.0 * pi / q0;
        const ExpectationX ex = expectation_x(w0, lambda0);
        s.check("c05_x_mean_closed_equals_d", std::abs(ex.closed_form / g.d() - 1.0), 1e-13,
                "<=");
        s.check("c05_x_mean_quadrature", std::abs(ex.quadrature / g.d() - 1.0), 1e-3, "<=");

        double min_excess = std::numeric_limits<double>::infinity();
        for (int n = 0; n <= cfg.n_max; ++n) {
            const double q = quantized_q(n, g);
            const RelativeWaveform w{SymmetryKind::fermionic_odd, q};
            for (int loops : {2, 4, 6}) {
                const double x_max = loops * pi / q;
                const double kx = 2.0 * q * expectation_x(w, x_max).closed_form;
                min_excess = std::min(min_excess, kx - 2.0 * pi);
            }
        }
        s.check("c05_k_x_mean_min_minus_2pi", min_excess, -1e-12, ">=");
        s.check("c05_phi_mean_one_wavelength",
                std::abs(mean_phase(w0, 4.0 * pi) / (2.0 * pi) - 1.0), 1e-9, "<=");
    }

    // 6. Zero-point force and its thermal limit.
    {
        const ZeroPointForce f = zero_point_force(g, u);
        s.check("c06_force_central_diff_rel", f.relative_difference, 1e-6, "<=");
        const double T0 = characteristic_temperature(g, u);
        const double F_cold = thermal_force(0.01 * T0, g, u);
        s.check("c06_thermal_force_cold_limit", rel_err(F_cold, f.closed_form), 1e-10, "<=");
    }

    // 7. Macro-orbital operator identity.
    {
        const double q0 = quantized_q(0, g);
        const double K0 = quantized_K(0, g);
        const MacroOrbital mo = make_macro_orbital(SymmetryKind::fermionic_odd, q0, K0);
        const EigencheckResult ec = paired_operator_eigencheck(mo, u);
        const PairState gs = energy_levels({0, 0}, g, u);
        s.check("c07_eigencheck_residual_fermionic", ec.residual, 1e-4, "<=");
        s.check("c07_eigenvalue_is_half_pair_energy",
                rel_err(ec.eigenvalue, 0.5 * (gs.E_k + gs.E_K)), 1e-12, "<=");

        const MacroOrbital cusp = make_macro_orbital(SymmetryKind::bosonic_even_cusp, q0, K0);
        s.check("c07_eigencheck_residual_cusp", paired_operator_eigencheck(cusp, u).residual,
                1e-4, "<=");

        const MacroOrbital k0 = make_macro_orbital(SymmetryKind::fermionic_odd, q0, 0.0);
        s.check("c07_eigenvalue_K0_case",
                rel_err(paired_operator_eigencheck(k0, u).eigenvalue, 0.5 * gs.E_k), 1e-12,
                "<=");
    }

    // 8. Power-law tail classification.
    {
        const double k = cfg.probe_k;
        const double B = cfg.powerlaw_B;
        int mismatches = 0;
        const std::pair<double, ContactLimitKind> cases[] = {
            {0.5, ContactLimitKind::zero},
            {1.0, ContactLimitKind::finite},
            {1.5, ContactLimitKind::divergent}};
        double max_slope_err = 0.0;
        for (const auto& [alpha, kind] : cases) {
            const PowerLawStrength p{B, alpha};
            if (classify_limit(p, k).kind != kind) ++mismatches;
            const SlopeMeasurement sm = measure_integrand_slope(p, k);
            max_slope_err = std::max(max_slope_err, std::abs(sm.slope - (1.0 - alpha)));
        }
        s.check("c08_regime_mismatches", static_cast<double>(mismatches), 0.0, "==");
        s.check("c08_finite_value_rel",
                rel_err(classify_limit({B, 1.0}, k).finite_value, 0.5 * B * k * k), 1e-14,
                "<=");
        s.check("c08_slope_max_abs_err", max_slope_err, 0.02, "<=");

        const EffectiveMass em = effective_mass(B, u);
        const double E_sum = relative_kinetic_energy(k, u.mass, u) + 0.5 * B * k * k;
        const double E_star = relative_kinetic_energy(k, em.m_star, u);
        s.check("c08_effective_mass_identity", rel_err(E_star, E_sum), 1e-12, "<=");
        const double B_half = 0.5 * u.hbar * u.hbar / u.mass;
        s.check("c08_half_mass_at_special_B",
                rel_err(effective_mass(B_half, u).m_star, 0.5 * u.mass), 1e-14, "<=");
    }

    // 9. Thermal occupation.
    {
        const double T0 = characteristic_temperature(g, u);
        double max_norm_err = 0.0;
        for (double f : {1e-2, 1e-1, 1.0, 1e1, 1e2}) {
            const ThermalOccupation occ = occupations(f * T0, g, u);
            double sum = 0.0;
            for (double p : occ.probabilities) sum += p;
            max_norm_err = std::max(max_norm_err, std::abs(sum - 1.0));
        }
        s.check("c09_occupation_norm_err", max_norm_err, 1e-12, "<=");

        const ThermalOccupation at_T0 = occupations(T0, g, u);
        s.check("c09_p1_over_p0_at_T0",
                rel_err(at_T0.probabilities[1] / at_T0.probabilities[0], std::exp(-6.0)),
                1e-12, "<=");

        const double T_star = 6.0 * eps0 / (u.kB * std::log(10.0));
        const ThermalOccupation at_star = occupations(T_star, g, u);
        s.check("c09_ratio_0p1_temperature",
                rel_err(at_star.probabilities[1] / at_star.probabilities[0], 0.1), 1e-12,
                "<=");
        s.check("c09_ratio_0p1_is_2p61_T0", std::abs(T_star / T0 - 6.0 / std::log(10.0)),
                1e-13, "<=");

        const GroundEnergyShares shares = km_energy_share(g, u);
        s.check("c09_K_share_of_eps0_exact", std::abs(shares.K_share_of_eps0 - 0.125), 0.0,
                "==");
        s.check("c09_k_share_of_eps0_exact", std::abs(shares.k_share_of_eps0 - 2.0), 0.0,
                "==");
        s.check("c09_K_share_of_total_exact", std::abs(shares.K_share_of_total - 1.0 / 17.0),
                0.0, "==");

        const ThermalOccupation hot = occupations(10.0 * T0, g, u);
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t n = 0; n + 1 < hot.probabilities.size(); ++n)
            min_gap = std::min(min_gap, hot.probabilities[n] - hot.probabilities[n + 1]);
        s.check("c09_occupation_ordering", min_gap, 0.0, ">=");

        const ThermalOccupation base = occupations(10.0 * T0, g, u);
        const ThermalOccupation doubled = occupations(10.0 * T0, g, u, 2 * base.n_cutoff);
        double max_shift = 0.0;
        for (std::size_t n = 0; n < base.probabilities.size(); ++n)
            max_shift =
                std::max(max_shift, std::abs(base.probabilities[n] - doubled.probabilities[n]));
        s.check("c09_cutoff_insensitivity", max_shift, 1e-12, "<=");

        const double F_T0 = thermal_force(T0, g, u);
        const double F_10T0 = thermal_force(10.0 * T0, g, u);
        s.check("c09_force_monotone_in_T", F_10T0 - F_T0, 0.0, ">");
        s.check("c09_force_at_T0_within_2pct",
                rel_err(F_T0, zero_point_force(g, u).closed_form), 0.02, "<=");
    }

    // 10. Structural property sweeps on fixed-seed random points.
    {
        std::mt19937_64 rng(0x5eedULL);
        std::uniform_real_distribution<double> coord(-2.5, 2.5);
        std::uniform_real_distribution<double> mom(0.2, 8.0);

        const double q0 = quantized_q(0, g);
        const RelativeWaveform odd{SymmetryKind::fermionic_odd, q0};
        const RelativeWaveform cusp{SymmetryKind::bosonic_even_cusp, q0};
        double max_density_gap = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double x = coord(rng);
            max_density_gap = std::max(
                max_density_gap, std::abs(relative_density(odd, x) - relative_density(cusp, x)));
        }
        s.check("c10_density_equality", max_density_gap, 1e-14, "<=");

        double max_fact_err = 0.0;
        double max_antisym = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double k1 = -mom(rng);
            const double k2 = mom(rng);
            const double x1 = coord(rng);
            const double x2 = coord(rng);
            for (ExchangeSign sign : {ExchangeSign::symmetric, ExchangeSign::antisymmetric}) {
                const std::complex<double> a = pair_plane_wave_state(k1, k2, x1, x2, sign);
                const std::complex<double> b = factorized_pair_state(k1, k2, x1, x2, sign);
                max_fact_err = std::max(max_fact_err, std::abs(a - b));
            }
            const std::complex<double> direct =
                pair_plane_wave_state(k1, k2, x1, x2, ExchangeSign::antisymmetric);
            const std::complex<double> swapped =
                pair_plane_wave_state(k1, k2, x2, x1, ExchangeSign::antisymmetric);
            max_antisym = std::max(max_antisym, std::abs(direct + swapped));
            max_antisym = std::max(
                max_antisym,
                std::abs(pair_plane_wave_state(k1, k2, x1, x1, ExchangeSign::antisymmetric)));
        }
        s.check("c10_factorization_max_err", max_fact_err, 1e-12, "<=");
        s.check("c10_plane_wave_antisymmetry", max_antisym, 1e-14, "<=");

        const double K0 = quantized_K(0, g);
        const MacroOrbital mo1 = make_macro_orbital(SymmetryKind::fermionic_odd, q0, K0);
        const MacroOrbital mo2 = make_macro_orbital(SymmetryKind::fermionic_odd, q0, K0);
        const MacroOrbital mo3 =
            make_macro_orbital(SymmetryKind::fermionic_odd, q0, quantized_K(1, g));
        const TwoBodyProduct equal_K =
            two_body_symmetrized_product(mo1, mo2, ExchangeSign::antisymmetric);
        const TwoBodyProduct antisym =
            two_body_symmetrized_product(mo1, mo3, ExchangeSign::antisymmetric);
        double max_equal_K = 0.0;
        double max_exchange = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double x1 = coord(rng), X1 = coord(rng);
            const double x2 = coord(rng), X2 = coord(rng);
            max_equal_K = std::max(max_equal_K, std::abs(equal_K(x1, X1, x2, X2)));
            max_exchange = std::max(
                max_exchange, std::abs(antisym(x1, X1, x2, X2) + antisym(x2, X2, x1, X1)));
        }
        s.check("c10_two_body_equal_K_vanishes", max_equal_K, 1e-14, "<=");
        s.check("c10_two_body_exchange_antisymmetry", max_exchange, 1e-14, "<=");

        double max_roundtrip = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const LabCoordinates lab{coord(rng), coord(rng), mom(rng), mom(rng)};
            const LabCoordinates back = lab_transform(cm_transform(lab));
            max_roundtrip = std::max({max_roundtrip, std::abs(back.x1 - lab.x1),
                                      std::abs(back.x2 - lab.x2), std::abs(back.k1 - lab.k1),
                                      std::abs(back.k2 - lab.k2)});
        }
        s.check("c10_cm_lab_roundtrip", max_roundtrip, 1e-14, "<=");

        int validity_mismatches = 0;
        if (!hc_validity_check(5.0, 0.0)) ++validity_mismatches;
        if (!hc_validity_check(2.0 * pi / 0.25, 0.25)) ++validity_mismatches;
        if (hc_validity_check(3.0 * pi / 0.25, 0.25)) ++validity_mismatches;
        s.check("c10_hc_validity_cases", static_cast<double>(validity_mismatches), 0.0, "==");

        RunConfig quiet = cfg;
        quiet.out = "-";
        const std::string once = render_csv(cmd_spectrum(quiet), false);
        const std::string twice = render_csv(cmd_spectrum(quiet), false);
        s.check("c10_determinism_bytes", once == twice ? 0.0 : 1.0, 0.0, "==");
    }

    SelftestReport report;
    report.seconds = seconds_since(t_start);
    s.check("c10_runtime_seconds", report.seconds, 60.0, "<=");
    report.items = std::move(s.items);
    report.all_pass = true;
    for (const SelftestItem& item : report.items)
        if (!item.pass) report.all_pass = false;
    return report;
}

std::string format_selftest_report(const SelftestReport& report) {
    std::string out;
    int passed = 0;
    for (const SelftestItem& item : report.items) {
        char line[160];
        std::snprintf(line, sizeof line, "%-4s %-40s measured=% .10e  bound %s % .3e\n",
                      item.pass ? "PASS" : "FAIL", item.name.c_str(), item.measured,
                      item.op.c_str(), item.bound);
        out += line;
        if (item.pass) ++passed;
    }
    char tail[120];
    std::snprintf(tail, sizeof tail, "selftest: %d/%zu checks passed in %.2f s\nRESULT: %s\n",
                  passed, report.items.size(), report.seconds,
                  report.all_pass ? "PASS" : "FAIL");
    out += tail;
    return out;
}

}  // namespace hcpair::cli
