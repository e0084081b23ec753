#include "hcpair/waveform.hpp"

#include <cmath>

namespace hcpair {

namespace {
constexpr double sqrt2 = 1.4142135623730950488;
}

double relative_waveform_eval(const RelativeWaveform& w, double x) {
    w.validate();
    switch (w.symmetry) {
        case SymmetryKind::fermionic_odd:
            return sqrt2 * std::sin(w.q * x);
        case SymmetryKind::bosonic_even_cusp:
            return sqrt2 * std::sin(w.q * std::abs(x));
        case SymmetryKind::even_cosine:
            return sqrt2 * std::cos(w.q * x);
    }
    throw std::logic_error("relative_waveform_eval: unknown symmetry kind");
}

double relative_density(const RelativeWaveform& w, double x) {
    const double v = relative_waveform_eval(w, x);
    return v * v;
}

double cm_waveform_eval(int N, double X, const BoxGeometry& g) {
    if (N < 0) throw std::invalid_argument("cm_waveform_eval: N must be >= 0");
    const double half = 0.5 * g.L();
    if (X < -half || X > half)
        throw std::invalid_argument("cm_waveform_eval: X outside the box walls");
    const double K = (N + 1) * pi / g.L();
    const double amp = std::sqrt(2.0 / g.L());
    // Even N levels are even about the box centre, odd N levels odd.
    return N % 2 == 0 ? amp * std::cos(K * X) : amp * std::sin(K * X);
}

std::complex<double> pair_plane_wave_state(double k1, double k2, double x1, double x2,
                                           ExchangeSign sign) {
    const std::complex<double> direct =
        std::exp(std::complex<double>(0.0, k1 * x1 + k2 * x2));
    const std::complex<double> exchanged =
        std::exp(std::complex<double>(0.0, k2 * x1 + k1 * x2));
    const double s = sign == ExchangeSign::symmetric ? 1.0 : -1.0;
    return (direct + s * exchanged) / sqrt2;
}

std::complex<double> factorized_pair_state(double k1, double k2, double x1, double x2,
                                           ExchangeSign sign) {
    const CmCoordinates cm = cm_transform({x1, x2, k1, k2});
    const std::complex<double> cm_phase = std::exp(std::complex<double>(0.0, cm.K * cm.X));
    if (sign == ExchangeSign::symmetric)
        return sqrt2 * std::cos(0.5 * cm.k * cm.x) * cm_phase;
    // e^{iu} - e^{-iu} = 2i sin u, hence the extra factor i in this channel.
    return std::complex<double>(0.0, 1.0) * sqrt2 * std::sin(0.5 * cm.k * cm.x) * cm_phase;
}

double phase_correlation(const RelativeWaveform& w, double phi) {
    w.validate();
    const double k = 2.0 * w.q;
    return relative_density(w, phi / k);
}

double expectation_delta_potential(const RelativeWaveform& w) {
    w.validate();
    switch (w.symmetry) {
        case SymmetryKind::fermionic_odd:
        case SymmetryKind::bosonic_even_cusp:
            return 0.0;  // both vanish at contact
        case SymmetryKind::even_cosine:
            throw std::invalid_argument(
                "expectation_delta_potential: the even cosine reference has no contact "
                "node; the hard-core limit does not apply");
    }
    throw std::logic_error("expectation_delta_potential: unknown symmetry kind");
}

}  // namespace hcpair
