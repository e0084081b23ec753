#pragma once

#include <cmath>
#include <stdexcept>

namespace hcpair::numeric {

// Uniform grid with npoints nodes spanning [x_min, x_max] inclusive.
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    int npoints = 0;
    double spacing = 0.0;

    double point(int i) const { return x_min + i * spacing; }

    // True when some node coincides with x to round-off; the matching index
    // is written to *index.
    bool node_at(double x, int* index = nullptr) const {
        const double t = (x - x_min) / spacing;
        const double r = std::round(t);
        if (std::abs(t - r) > 1e-9 || r < 0 || r >= npoints) return false;
        if (index) *index = static_cast<int>(r);
        return true;
    }
};

inline Grid make_grid(double x_min, double x_max, int npoints) {
    if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max))
        throw std::invalid_argument("make_grid: require finite x_max > x_min");
    if (npoints < 3) throw std::invalid_argument("make_grid: need at least 3 points");
    return {x_min, x_max, npoints, (x_max - x_min) / (npoints - 1)};
}

}  // namespace hcpair::numeric
