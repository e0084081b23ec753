#pragma once

#include <vector>

#include "hcpair/numeric/schrodinger.hpp"
#include "hcpair/units.hpp"

namespace hcpair::numeric {

// One row of the barrier-strength ladder: ground state of the relative
// problem on [-d, d] with a regularized contact barrier of area A at x = 0.
struct DeltaLimitRow {
    double A = 0.0;
    double eta0_abs = 0.0;     // |ground amplitude at contact|
    double l2_dist = 0.0;      // L2 distance to the hard-core cusp shape
    double V_expect = 0.0;     // <V> in the ground state; scales as 1/A
    double E0 = 0.0;           // ground energy; tends to 2 eps0 from below
    double E0_over_2eps0 = 0.0;
};

struct DeltaLimitOptions {
    int npoints = 4001;        // odd keeps a node at the contact point
    double width_factor = 2.0; // barrier width in grid spacings; >= 2
    StencilOptions stencil;
};

// Sweeps an ascending barrier ladder (A = 0 rows allowed as the
// barrier-free cosine reference) and reports the approach to the hard-core
// limit. Rows are computed in parallel and returned in ladder order.
std::vector<DeltaLimitRow> delta_limit_study(const std::vector<double>& A_ladder,
                                             const BoxGeometry& g, const PhysicalUnits& u,
                                             const DeltaLimitOptions& opt = {});

// Least-squares slope of log10(V_expect) against log10(A) over the opaque
// tail of the ladder (largest strengths); the hard-core limit gives -1.
double v_expect_slope(const std::vector<DeltaLimitRow>& rows, int tail_rows = 3);

// Relative-motion levels extracted from the plain Dirichlet problem on
// [0, L]: hard-core levels are the states with a node at the midpoint.
struct BoxSpectrumRow {
    int n = 0;
    double q = 0.0;  // sqrt(m E) / hbar
    double E = 0.0;
};

enum class MidpointRule {
    node_filter,     // keep Dirichlet states whose amplitude vanishes at L/2
    center_barrier,  // impose the node with a strong contact barrier instead
};

std::vector<BoxSpectrumRow> box_spectrum_numeric(const BoxGeometry& g, const PhysicalUnits& u,
                                                 int n_levels, int npoints,
                                                 MidpointRule rule = MidpointRule::node_filter,
                                                 const StencilOptions& stencil = {});

// Richardson exponent of ground-energy convergence from three spacings in
// ratio 4:2:1; the three-point stencil gives 2.0.
double eigenvalue_convergence_order(const BoxGeometry& g, const PhysicalUnits& u,
                                    int coarse_npoints = 251);

}  // namespace hcpair::numeric
