#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hcpair {

inline constexpr double pi = std::numbers::pi;

// Unit system for all energies and forces. Defaults give the reduced system
// hbar = m = kB = 1 used throughout the test suite; any strictly positive
// values are accepted.
struct PhysicalUnits {
    double hbar = 1.0;
    double mass = 1.0;  // mass of one particle, not the reduced mass
    double kB = 1.0;

    // Planck constant h = 2*pi*hbar. Energy formulas quoted per full quantum
    // h^2/8md^2 go through this accessor so hbar stays the single source.
    double h() const { return 2.0 * pi * hbar; }

    void validate() const {
        if (!(hbar > 0.0) || !(mass > 0.0) || !(kB > 0.0))
            throw std::invalid_argument(
                "PhysicalUnits: hbar, mass and kB must all be strictly positive");
    }
};

// Box of span L holding two impenetrable particles. Each particle moves in
// an exclusive half of the box, so the single-particle span is d = L/2; the
// factory keeps that identity exact (multiplication by 0.5 is lossless).
class BoxGeometry {
public:
    explicit BoxGeometry(double length) : L_(length), d_(0.5 * length) {
        if (!(length > 0.0) || !std::isfinite(length))
            throw std::invalid_argument("BoxGeometry: box span L must be finite and > 0");
    }

    double L() const { return L_; }
    double d() const { return d_; }

private:
    double L_;
    double d_;
};

// Quantum numbers of a pair level: n counts relative-motion excitations,
// N centre-of-mass excitations. Both start at 0 for the ground state.
struct PairQuantumNumbers {
    int n = 0;
    int N = 0;

    void validate() const {
        if (n < 0 || N < 0)
            throw std::invalid_argument("PairQuantumNumbers: n and N must be >= 0");
    }
};

// Ground-state energy scale of the interacting pair, eps0 = h^2 / (8 m d^2).
inline double ground_energy_scale(const BoxGeometry& g, const PhysicalUnits& u) {
    u.validate();
    const double h = u.h();
    return h * h / (8.0 * u.mass * g.d() * g.d());
}

// Same scale for a non-interacting particle spanning the whole box,
// eps0' = h^2 / (8 m L^2). Exactly eps0 / 4 since d = L/2.
inline double noninteracting_energy_scale(const BoxGeometry& g, const PhysicalUnits& u) {
    u.validate();
    const double h = u.h();
    return h * h / (8.0 * u.mass * g.L() * g.L());
}

}  // namespace hcpair
