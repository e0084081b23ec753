#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hcpair/observables.hpp"
#include "hcpair/quadrature.hpp"

using namespace hcpair;

TEST_CASE("adaptive quadrature sanity") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, pi) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0) ==
          doctest::Approx(1.7182818284590452).epsilon(1e-12));
    // Reversed bounds flip the sign; empty interval integrates to zero.
    CHECK(integrate([](double) { return 1.0; }, 1.0, 0.0) ==
          doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("trapezoid rule on uniform samples") {
    // Exact for affine data: y = 2x + 1 on [0, 1].
    std::vector<double> y(11);
    for (int i = 0; i < 11; ++i) y[i] = 2.0 * (0.1 * i) + 1.0;
    CHECK(trapezoid(y, 0.1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(trapezoid(std::vector<double>{1.0}, 0.1), std::invalid_argument);
}

TEST_CASE("mean separation on one wavelength equals half the domain") {
    const RelativeWaveform w{SymmetryKind::fermionic_odd, pi};  // lambda = 2
    const ExpectationX ex = expectation_x(w, 2.0);
    CHECK(ex.closed_form == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ex.quadrature == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mean separation on a non-aligned domain, frozen oracle") {
    // <x> over [0, 0.75] with density 2 sin^2(pi x).
    const RelativeWaveform w{SymmetryKind::fermionic_odd, pi};
    const ExpectationX ex = expectation_x(w, 0.75);
    CHECK(ex.closed_form == doctest::Approx(0.46850815305576822).epsilon(1e-13));
    CHECK(ex.quadrature == doctest::Approx(0.46850815305576822).epsilon(1e-9));
}

TEST_CASE("closed form and quadrature agree for every family") {
    for (SymmetryKind kind : {SymmetryKind::fermionic_odd, SymmetryKind::bosonic_even_cusp,
                              SymmetryKind::even_cosine}) {
        const RelativeWaveform w{kind, 2.0 * pi};
        for (double x_max : {0.3, 1.0, 1.7}) {
            const ExpectationX ex = expectation_x(w, x_max);
            CHECK(ex.quadrature == doctest::Approx(ex.closed_form).epsilon(1e-8));
        }
    }
}

TEST_CASE("mean separation scaled by k never falls below 2 pi on aligned domains") {
    const BoxGeometry g(2.0);
    for (int n = 0; n <= 5; ++n) {
        const double q = (n + 1) * pi / g.d();
        const RelativeWaveform w{SymmetryKind::fermionic_odd, q};
        for (int loops : {2, 3, 4, 8}) {
            const double x_max = loops * pi / q;  // loops half-wavelengths
            const double kx = 2.0 * q * expectation_x(w, x_max).closed_form;
            CHECK(kx >= 2.0 * pi - 1e-12);
        }
    }
}

TEST_CASE("expectation_x input validation") {
    const RelativeWaveform w{SymmetryKind::fermionic_odd, pi};
    CHECK_THROWS_AS(expectation_x(w, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(expectation_x(w, -1.0), std::invalid_argument);
}

TEST_CASE("mean phase over node-aligned and frozen domains") {
    const RelativeWaveform w{SymmetryKind::fermionic_odd, pi};
    // One full wavelength of phase: phi_max = 4 pi, mean 2 pi.
    CHECK(mean_phase(w, 4.0 * pi) == doctest::Approx(2.0 * pi).epsilon(1e-9));
    // Non-aligned domain [0, 5], frozen oracle.
    CHECK(mean_phase(w, 5.0) == doctest::Approx(3.0225185549736888).epsilon(1e-9));
    CHECK_THROWS_AS(mean_phase(w, 0.0), std::invalid_argument);
}

TEST_CASE("zero-point force closed form and central difference") {
    const BoxGeometry g(2.0);
    const PhysicalUnits u;
    const ZeroPointForce f = zero_point_force(g, u);
    CHECK(f.closed_form == doctest::Approx(19.739208802178717).epsilon(1e-14));
    CHECK(f.relative_difference <= 1e-8);
    CHECK(f.finite_difference == doctest::Approx(f.closed_form).epsilon(1e-8));

    // Coarser step, quadratically larger mismatch; still well inside 1e-6.
    const ZeroPointForce coarse = zero_point_force(g, u, 1e-4);
    CHECK(coarse.relative_difference <= 1e-6);
    CHECK(coarse.relative_difference > f.relative_difference);

    CHECK_THROWS_AS(zero_point_force(g, u, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(zero_point_force(g, u, 0.5), std::invalid_argument);
}

TEST_CASE("zero-point force scales as 1/d^3") {
    const PhysicalUnits u;
    const double f1 = zero_point_force(BoxGeometry(2.0), u).closed_form;
    const double f2 = zero_point_force(BoxGeometry(4.0), u).closed_form;
    CHECK(f1 / f2 == doctest::Approx(8.0).epsilon(1e-13));
}
