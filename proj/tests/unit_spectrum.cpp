#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hcpair/spectrum.hpp"

using namespace hcpair;

namespace {
const BoxGeometry box2(2.0);  // d = 1
const PhysicalUnits units{};  // hbar = m = kB = 1
}  // namespace

TEST_CASE("quantized momenta") {
    CHECK(quantized_q(0, box2) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(quantized_q(2, box2) == doctest::Approx(3.0 * pi).epsilon(1e-15));
    CHECK(quantized_K(0, box2) == doctest::Approx(0.5 * pi).epsilon(1e-15));
    CHECK(quantized_K(3, box2) == doctest::Approx(2.0 * pi).epsilon(1e-15));
    CHECK_THROWS_AS(quantized_q(-1, box2), std::invalid_argument);
    CHECK_THROWS_AS(quantized_K(-1, box2), std::invalid_argument);
}

TEST_CASE("ground pair level") {
    const PairState gs = energy_levels({0, 0}, box2, units);
    // The dyadic ratio route is exact: [16 + 1] / 8.
    CHECK(gs.E_over_eps0 == 2.125);
    // Dimensionful values, frozen: eps0 = pi^2/2, E(0,0) = 17 pi^2 / 16.
    CHECK(ground_energy_scale(box2, units) ==
          doctest::Approx(4.9348022005446793).epsilon(1e-14));
    CHECK(gs.E_total == doctest::Approx(10.486454676157444).epsilon(1e-14));
    CHECK(gs.E_k == doctest::Approx(pi * pi).epsilon(1e-14));
    CHECK(gs.E_K == doctest::Approx(pi * pi / 16.0).epsilon(1e-14));
    CHECK(gs.E_total == doctest::Approx(gs.E_k + gs.E_K).epsilon(1e-15));
    // Momenta carried along: q0 = pi/d, K0 = pi/L, k1/k2 in units of pi/L.
    const double unit = pi / box2.L();
    CHECK(gs.waves.q == doctest::Approx(pi).epsilon(1e-15));
    CHECK(gs.waves.k1 / unit == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(gs.waves.k2 / unit == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("excited level dyadic ratios are exact") {
    CHECK(energy_levels({1, 2}, box2, units).E_over_eps0 == 73.0 / 8.0);
    CHECK(energy_levels({0, 1}, box2, units).E_over_eps0 == 2.5);
    CHECK(energy_levels({3, 0}, box2, units).E_over_eps0 == 257.0 / 8.0);
}

TEST_CASE("energy ratio is independent of units and scale") {
    const PhysicalUnits odd_units{0.7, 2.9, 3.1};
    const BoxGeometry g(0.37);
    CHECK(energy_levels({0, 0}, g, odd_units).E_over_eps0 == 2.125);
    const double ratio =
        energy_levels({0, 0}, g, odd_units).E_total / ground_energy_scale(g, odd_units);
    CHECK(ratio == doctest::Approx(2.125).epsilon(1e-13));
}

TEST_CASE("non-interacting reference scales") {
    const NoninteractingReference r = noninteracting_comparison(box2, units);
    CHECK(r.energy_ratio == 4.0);
    CHECK(r.momentum_ratio == 2.0);
    CHECK(r.eps0 == doctest::Approx(4.9348022005446793).epsilon(1e-14));
    CHECK(r.eps0_prime == doctest::Approx(4.9348022005446793 / 4.0).epsilon(1e-14));
    CHECK(r.q0 == doctest::Approx(pi).epsilon(1e-15));
    CHECK(r.q0_prime == doctest::Approx(0.5 * pi).epsilon(1e-15));
}

TEST_CASE("momentum enumeration schemes") {
    const SpectrumComparison cmp = spectrum_compare(2, 3, box2);
    const double unit = pi / box2.L();
    CHECK(cmp.interacting.size() == 12);
    CHECK(cmp.integer_grid.size() == 12);

    CHECK(cmp.interacting_ground.i1 == 0);
    CHECK(cmp.interacting_ground.i2 == 0);
    CHECK(cmp.interacting_ground.k1 / unit == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(cmp.interacting_ground.k2 / unit == doctest::Approx(2.5).epsilon(1e-14));

    CHECK(cmp.integer_ground.i1 == 1);
    CHECK(cmp.integer_ground.i2 == 1);
    CHECK(cmp.integer_ground.k1 / unit == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(cmp.integer_ground.k2 / unit == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(cmp.free_ground.k1 / unit == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(cmp.free_ground.k2 / unit == doctest::Approx(1.0).epsilon(1e-14));

    // Every interacting entry keeps k1 < k2 and half-integer spacing.
    for (const MomentumPair& p : cmp.interacting) {
        CHECK(p.k1 < p.k2);
        const double twice = 2.0 * p.k1 / unit;
        CHECK(twice == doctest::Approx(std::round(twice)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(spectrum_compare(-1, 0, box2), std::invalid_argument);
}

TEST_CASE("hard-core admissibility window") {
    CHECK(hc_validity_check(5.0, 0.0));
    CHECK(hc_validity_check(2.0 * pi / 0.25, 0.25));
    CHECK_FALSE(hc_validity_check(3.0 * pi / 0.25, 0.25));
    CHECK_THROWS_AS(hc_validity_check(1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(hc_validity_check(-1.0, 0.5), std::invalid_argument);
}
