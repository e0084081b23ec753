#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hcpair/units.hpp"

namespace hcpair {

// Relative / centre-of-mass picture of a two-particle configuration.
// x = x2 - x1, X = (x1 + x2)/2, k = k2 - k1, K = k1 + k2.
struct CmCoordinates {
    double x = 0.0;
    double X = 0.0;
    double k = 0.0;
    double K = 0.0;
};

struct LabCoordinates {
    double x1 = 0.0;
    double x2 = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
};

inline CmCoordinates cm_transform(const LabCoordinates& lab) {
    return {lab.x2 - lab.x1, 0.5 * (lab.x1 + lab.x2), lab.k2 - lab.k1, lab.k1 + lab.k2};
}

inline LabCoordinates lab_transform(const CmCoordinates& cm) {
    return {cm.X - 0.5 * cm.x, cm.X + 0.5 * cm.x, 0.5 * (cm.K - cm.k), 0.5 * (cm.K + cm.k)};
}

// Momentum bookkeeping for one pair state. q is the half relative momentum
// (k = 2q) and lambda = 2*pi/q the relative wavelength; k1, k2 are the
// underlying single-particle momenta k1 = -q + K/2, k2 = q + K/2.
struct WaveNumbers {
    double q = 0.0;
    double K = 0.0;
    double k = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    double lambda = 0.0;
};

// Builds the full momentum set from (q, K). q < 0 is rejected: the sign of q
// only labels which particle carries which momentum, so pre-collision states
// use q >= 0 by convention. q = 0 gives an infinite wavelength.
inline WaveNumbers decompose_momenta(double q, double K) {
    if (q < 0.0 || !std::isfinite(q) || !std::isfinite(K))
        throw std::invalid_argument("decompose_momenta: require finite q >= 0 and finite K");
    WaveNumbers w;
    w.q = q;
    w.K = K;
    w.k = 2.0 * q;
    w.k1 = -q + 0.5 * K;
    w.k2 = q + 0.5 * K;
    w.lambda = q > 0.0 ? 2.0 * pi / q : std::numeric_limits<double>::infinity();
    return w;
}

// An elastic hard-core collision swaps the particle momenta: q -> -q. The
// invariants of the pair, |k| and K, are untouched.
inline WaveNumbers after_collision(const WaveNumbers& w) {
    WaveNumbers out = w;
    out.q = -w.q;
    out.k = -w.k;
    out.k1 = w.k2;
    out.k2 = w.k1;
    return out;
}

}  // namespace hcpair
