#include "hcpair/numeric/delta_limit.hpp"

#include <algorithm>
#include <cmath>

#include "hcpair/numeric/parallel_scan.hpp"
#include "hcpair/quadrature.hpp"

namespace hcpair::numeric {

namespace {

// Hard-core cusp shape sin(q0 |x|) on the study grid, normalized with the
// same trapezoid rule as the solver output so distances compare like with like.
std::vector<double> cusp_reference(const Grid& grid, double q0) {
    std::vector<double> ref(grid.npoints);
    for (int i = 0; i < grid.npoints; ++i)
        ref[i] = std::sin(q0 * std::abs(grid.point(i)));
    std::vector<double> density(grid.npoints);
    for (int i = 0; i < grid.npoints; ++i) density[i] = ref[i] * ref[i];
    const double nrm = std::sqrt(hcpair::trapezoid(density, grid.spacing));
    for (double& r : ref) r /= nrm;
    return ref;
}

}  // namespace

std::vector<DeltaLimitRow> delta_limit_study(const std::vector<double>& A_ladder,
                                             const BoxGeometry& g, const PhysicalUnits& u,
                                             const DeltaLimitOptions& opt) {
    u.validate();
    if (A_ladder.empty())
        throw std::invalid_argument("delta_limit_study: empty strength ladder");
    for (std::size_t i = 0; i < A_ladder.size(); ++i) {
        if (A_ladder[i] < 0.0 || !std::isfinite(A_ladder[i]))
            throw std::invalid_argument(
                "delta_limit_study: barrier strengths must be finite and >= 0");
        if (i > 0 && A_ladder[i] <= A_ladder[i - 1])
            throw std::invalid_argument(
                "delta_limit_study: strength ladder must ascend strictly");
    }
    if (opt.width_factor < 2.0)
        throw std::invalid_argument(
            "delta_limit_study: barrier narrower than two grid spacings is unresolvable");

    const Grid grid = make_grid(-g.d(), g.d(), opt.npoints);
    const double width = opt.width_factor * grid.spacing;
    if (width >= 0.5 * g.d())
        throw std::invalid_argument("delta_limit_study: barrier width comparable to the box");

    const double q0 = pi / g.d();
    const std::vector<double> ref = cusp_reference(grid, q0);
    const double two_eps0 = 2.0 * ground_energy_scale(g, u);

    return parallel_map(A_ladder, [&](double A) {
        const RegularizedDelta barrier{A, width};
        barrier.validate();
        // Window shrunk by a relative 1e-9 so a node sitting on the edge to
        // round-off is excluded deterministically; with width_factor = 2 and
        // an odd grid exactly the contact node samples the barrier.
        const double half_w = 0.5 * barrier.width * (1.0 - 1e-9);
        const double height = barrier.strength / barrier.width;
        const auto V = [half_w, height](double x) {
            return std::abs(x) < half_w ? height : 0.0;
        };
        // The ground state of a symmetric potential is nodeless and even, so
        // one eigenpair suffices per strength.
        const EigenResult sol = solve_lowest_states(grid, V, u, 1, opt.stencil);
        const std::vector<double>& v = sol.eigenvectors[0];

        DeltaLimitRow row;
        row.A = A;
        row.eta0_abs = std::abs(value_at(v, grid, 0.0));
        double dist2 = 0.0;
        {
            std::vector<double> diff2(grid.npoints);
            for (int i = 0; i < grid.npoints; ++i) {
                const double dlt = v[i] - ref[i];
                diff2[i] = dlt * dlt;
            }
            dist2 = hcpair::trapezoid(diff2, grid.spacing);
        }
        row.l2_dist = std::sqrt(dist2);
        row.V_expect = expectation_numeric(v, grid, V);
        row.E0 = sol.eigenvalues[0];
        row.E0_over_2eps0 = row.E0 / two_eps0;
        return row;
    });
}

double v_expect_slope(const std::vector<DeltaLimitRow>& rows, int tail_rows) {
    std::vector<std::pair<double, double>> pts;
    for (const DeltaLimitRow& r : rows)
        if (r.A > 0.0 && r.V_expect > 0.0) pts.emplace_back(std::log10(r.A), std::log10(r.V_expect));
    if (static_cast<int>(pts.size()) < 2)
        throw std::invalid_argument("v_expect_slope: need at least two positive-strength rows");
    const int use = std::min<int>(std::max(tail_rows, 2), static_cast<int>(pts.size()));
    pts.erase(pts.begin(), pts.end() - use);

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double npts = static_cast<double>(pts.size());
    return (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
}

std::vector<BoxSpectrumRow> box_spectrum_numeric(const BoxGeometry& g, const PhysicalUnits& u,
                                                 int n_levels, int npoints, MidpointRule rule,
                                                 const StencilOptions& stencil) {
    u.validate();
    if (n_levels < 1) throw std::invalid_argument("box_spectrum_numeric: n_levels must be >= 1");
    const Grid grid = make_grid(0.0, g.L(), npoints);
    const double mid = 0.5 * g.L();

    std::function<double(double)> V = [](double) { return 0.0; };
    double node_threshold = 0.05;  // Dirichlet states either vanish or are O(max) there
    if (rule == MidpointRule::center_barrier) {
        if (!grid.node_at(mid))
            throw std::invalid_argument(
                "box_spectrum_numeric: center_barrier needs a grid node at the midpoint "
                "(odd npoints)");
        // States with an exact midpoint node pass through the barrier
        // unperturbed whatever A is; their even partners leak
        // |psi(mid)|/max ~ 4 pi (n+1) / (m A L / hbar^2), so A is chosen to
        // pin that leakage decades above the node threshold (rejected) while
        // solver round-off at exact nodes stays decades below it (kept).
        const double A = 1e4 * u.hbar * u.hbar / (u.mass * g.L());
        const RegularizedDelta barrier{A, 2.0 * grid.spacing};
        const double half_w = 0.5 * barrier.width * (1.0 - 1e-9);
        const double height = barrier.strength / barrier.width;
        V = [half_w, height, mid](double x) {
            return std::abs(x - mid) < half_w ? height : 0.0;
        };
        node_threshold = 1e-6;
    }

    const int count = std::min(2 * n_levels + 2, grid.npoints - 2);
    const EigenResult sol = solve_lowest_states(grid, V, u, count, stencil);

    std::vector<BoxSpectrumRow> rows;
    rows.reserve(n_levels);
    for (int j = 0; j < count && static_cast<int>(rows.size()) < n_levels; ++j) {
        const std::vector<double>& v = sol.eigenvectors[j];
        double vmax = 0.0;
        for (double x : v) vmax = std::max(vmax, std::abs(x));
        if (std::abs(value_at(v, grid, mid)) > node_threshold * vmax) continue;
        BoxSpectrumRow row;
        row.n = static_cast<int>(rows.size());
        row.E = sol.eigenvalues[j];
        row.q = std::sqrt(std::max(0.0, row.E) * u.mass) / u.hbar;
        rows.push_back(row);
    }
    if (static_cast<int>(rows.size()) < n_levels)
        throw NonConvergenceError(
            "box_spectrum_numeric: midpoint-node filter found too few hard-core levels");
    return rows;
}

double eigenvalue_convergence_order(const BoxGeometry& g, const PhysicalUnits& u,
                                    int coarse_npoints) {
    if (coarse_npoints < 51)
        throw std::invalid_argument("eigenvalue_convergence_order: coarse grid too small");
    const auto ground = [&](int npoints) {
        const Grid grid = make_grid(0.0, g.d(), npoints);
        const auto V = [](double) { return 0.0; };
        return solve_lowest_states(grid, V, u, 1).eigenvalues[0];
    };
    // npoints chosen so the spacing halves exactly between refinements.
    const double e1 = ground(coarse_npoints);
    const double e2 = ground(2 * coarse_npoints - 1);
    const double e3 = ground(4 * coarse_npoints - 3);
    return std::log2((e1 - e2) / (e2 - e3));
}

}  // namespace hcpair::numeric
