#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hcpair/macro_orbital.hpp"
#include "hcpair/spectrum.hpp"

using namespace hcpair;

TEST_CASE("normalization constant B = sqrt(q/pi)") {
    CHECK(make_macro_orbital(SymmetryKind::fermionic_odd, pi, 0.0).norm_B ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(make_macro_orbital(SymmetryKind::fermionic_odd, 2.0 * pi, 0.0).norm_B ==
          doctest::Approx(1.4142135623730950).epsilon(1e-15));
    CHECK_THROWS_AS(make_macro_orbital(SymmetryKind::fermionic_odd, 0.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("macro-orbital evaluation") {
    const MacroOrbital mo = make_macro_orbital(SymmetryKind::fermionic_odd, pi, 0.5 * pi);
    // At X = 0 the CM phase is 1 and the value is B sqrt(2) sin(q x).
    const std::complex<double> v0 = macro_orbital_eval(mo, 0.25, 0.0);
    CHECK(v0.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v0.imag() == 0.0);
    // The CM phase only rotates: |xi| is independent of X.
    const std::complex<double> v1 = macro_orbital_eval(mo, 0.25, 0.77);
    CHECK(std::abs(v1) == doctest::Approx(std::abs(v0)).epsilon(1e-14));
    CHECK(std::arg(v1) == doctest::Approx(0.5 * pi * 0.77).epsilon(1e-13));
}

TEST_CASE("paired operator eigencheck at the ground pair") {
    const BoxGeometry g(2.0);
    const PhysicalUnits u;
    const MacroOrbital mo =
        make_macro_orbital(SymmetryKind::fermionic_odd, quantized_q(0, g), quantized_K(0, g));
    const EigencheckResult ec = paired_operator_eigencheck(mo, u);
    // The eigenvalue is half the pair energy: 17 pi^2 / 32, frozen.
    CHECK(ec.eigenvalue == doctest::Approx(5.2432273380787218).epsilon(1e-13));
    const PairState gs = energy_levels({0, 0}, g, u);
    CHECK(ec.eigenvalue == doctest::Approx(0.5 * gs.E_total).epsilon(1e-13));
    CHECK(ec.residual <= 1e-4);
}

TEST_CASE("eigencheck holds for the cusp family and for K = 0") {
    const PhysicalUnits u;
    const MacroOrbital cusp = make_macro_orbital(SymmetryKind::bosonic_even_cusp, pi, 0.5 * pi);
    CHECK(paired_operator_eigencheck(cusp, u).residual <= 1e-4);

    const MacroOrbital pure = make_macro_orbital(SymmetryKind::fermionic_odd, pi, 0.0);
    const EigencheckResult ec = paired_operator_eigencheck(pure, u);
    CHECK(ec.eigenvalue == doctest::Approx(0.5 * pi * pi).epsilon(1e-14));
    CHECK(ec.residual <= 1e-4);
}

TEST_CASE("eigencheck residual shrinks with grid refinement") {
    const PhysicalUnits u;
    const MacroOrbital mo = make_macro_orbital(SymmetryKind::fermionic_odd, pi, 0.5 * pi);
    const double coarse = paired_operator_eigencheck(mo, u, 201, 51).residual;
    const double fine = paired_operator_eigencheck(mo, u, 801, 201).residual;
    CHECK(fine < coarse);
}

TEST_CASE("eigencheck rejects under-resolved grids") {
    const PhysicalUnits u;
    const MacroOrbital mo = make_macro_orbital(SymmetryKind::fermionic_odd, pi, 0.0);
    CHECK_THROWS_AS(paired_operator_eigencheck(mo, u, 50, 201), std::invalid_argument);
    CHECK_THROWS_AS(paired_operator_eigencheck(mo, u, 1001, 5), std::invalid_argument);
}

TEST_CASE("two-body product structure") {
    const MacroOrbital a = make_macro_orbital(SymmetryKind::fermionic_odd, pi, 0.5 * pi);
    const MacroOrbital b = make_macro_orbital(SymmetryKind::fermionic_odd, pi, pi);

    const TwoBodyProduct sym = two_body_symmetrized_product(a, b, ExchangeSign::symmetric);
    const TwoBodyProduct anti = two_body_symmetrized_product(a, b, ExchangeSign::antisymmetric);

    const double pts[][4] = {{0.3, -0.8, 0.6, 0.2}, {-0.4, 0.1, 0.9, -0.7}};
    for (const auto& p : pts) {
        const std::complex<double> d1 = sym.direct_term(p[0], p[1], p[2], p[3]);
        const std::complex<double> s = sym(p[0], p[1], p[2], p[3]);
        const std::complex<double> t = anti(p[0], p[1], p[2], p[3]);
        // Half the channel sum recovers the direct (identity) term.
        CHECK(std::abs(0.5 * (s + t) - d1) <= 1e-14);

        // Swapping both units flips the antisymmetric channel (equal q).
        CHECK(std::abs(anti(p[2], p[3], p[0], p[1]) + t) <= 1e-14);
        CHECK(std::abs(sym(p[2], p[3], p[0], p[1]) - s) <= 1e-14);
    }
}

TEST_CASE("equal-K antisymmetric two-body product vanishes identically") {
    const MacroOrbital a = make_macro_orbital(SymmetryKind::fermionic_odd, pi, 0.5 * pi);
    const TwoBodyProduct anti = two_body_symmetrized_product(a, a, ExchangeSign::antisymmetric);
    for (double x1 : {-0.9, 0.2, 0.7})
        for (double X2 : {-1.1, 0.4})
            CHECK(std::abs(anti(x1, 0.3, -0.5, X2)) <= 1e-14);
}
