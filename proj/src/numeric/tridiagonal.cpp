#include "hcpair/numeric/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace hcpair::numeric {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double safe_min = std::numeric_limits<double>::min();

// Deterministic start vector for inverse iteration; splitmix64 keeps the
// solver seedless and reproducible across platforms.
double hash_unit(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// LU factorization of (T - shift I) with partial pivoting; standard
// tridiagonal scheme with one fill-in band.
struct ShiftedFactor {
    std::vector<double> dl, d, du, du2;
    std::vector<char> piv;

    ShiftedFactor(const SymmetricTridiagonal& T, double shift, double pivmin) {
        const int n = T.n();
        dl = T.off();
        du = T.off();
        d.resize(n);
        for (int i = 0; i < n; ++i) d[i] = T.diag()[i] - shift;
        du2.assign(std::max(0, n - 2), 0.0);
        piv.assign(std::max(0, n - 1), 0);
        for (int i = 0; i + 1 < n; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                if (std::abs(d[i]) < pivmin) d[i] = d[i] < 0.0 ? -pivmin : pivmin;
                const double fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                const double fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                const double tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - fact * d[i + 1];
                if (i + 2 < n) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                piv[i] = 1;
            }
        }
        if (std::abs(d[n - 1]) < pivmin) d[n - 1] = d[n - 1] < 0.0 ? -pivmin : pivmin;
    }

    void solve(std::vector<double>& b) const {
        const int n = static_cast<int>(d.size());
        for (int i = 0; i + 1 < n; ++i) {
            if (!piv[i]) {
                b[i + 1] -= dl[i] * b[i];
            } else {
                const double tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - dl[i] * b[i];
            }
        }
        b[n - 1] /= d[n - 1];
        if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        for (int i = n - 3; i >= 0; --i)
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
};

}  // namespace

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diag, std::vector<double> off)
    : diag_(std::move(diag)), off_(std::move(off)) {
    if (diag_.size() < 2 || off_.size() + 1 != diag_.size())
        throw std::invalid_argument(
            "SymmetricTridiagonal: need n >= 2 diagonal entries and n-1 off entries");
    for (double v : diag_)
        if (!std::isfinite(v))
            throw std::invalid_argument("SymmetricTridiagonal: non-finite diagonal entry");
    for (double v : off_)
        if (!std::isfinite(v))
            throw std::invalid_argument("SymmetricTridiagonal: non-finite off-diagonal entry");
}

std::vector<double> SymmetricTridiagonal::apply(const std::vector<double>& x) const {
    const int n = this->n();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("SymmetricTridiagonal::apply: size mismatch");
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double s = diag_[i] * x[i];
        if (i > 0) s += off_[i - 1] * x[i - 1];
        if (i + 1 < n) s += off_[i] * x[i + 1];
        y[i] = s;
    }
    return y;
}

int SymmetricTridiagonal::eigenvalues_below(double x) const {
    // Sturm sequence on the shifted LDL^T pivots; pivmin guards division.
    double max_off2 = 0.0;
    for (double e : off_) max_off2 = std::max(max_off2, e * e);
    const double pivmin = std::max(safe_min, safe_min * max_off2 / eps);
    int count = 0;
    double t = diag_[0] - x;
    if (std::abs(t) < pivmin) t = -pivmin;
    if (t < 0.0) ++count;
    for (std::size_t i = 1; i < diag_.size(); ++i) {
        t = diag_[i] - x - off_[i - 1] * off_[i - 1] / t;
        if (std::abs(t) < pivmin) t = -pivmin;
        if (t < 0.0) ++count;
    }
    return count;
}

void SymmetricTridiagonal::spectral_bounds(double* lo, double* hi) const {
    double l = std::numeric_limits<double>::infinity();
    double h = -l;
    const int n = this->n();
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(off_[i - 1]);
        if (i + 1 < n) r += std::abs(off_[i]);
        l = std::min(l, diag_[i] - r);
        h = std::max(h, diag_[i] + r);
    }
    *lo = l;
    *hi = h;
}

double SymmetricTridiagonal::norm_bound() const {
    double lo, hi;
    spectral_bounds(&lo, &hi);
    return std::max({std::abs(lo), std::abs(hi), safe_min});
}

TridiagonalEigenResult solve_lowest(const SymmetricTridiagonal& T, int count,
                                    const EigenSolveOptions& opt) {
    const int n = T.n();
    if (count < 1 || count > n)
        throw std::invalid_argument("solve_lowest: count must lie in [1, n]");

    double lo0, hi0;
    T.spectral_bounds(&lo0, &hi0);
    const double scale = T.norm_bound();
    double max_off2 = 0.0;
    for (double e : T.off()) max_off2 = std::max(max_off2, e * e);
    const double pivmin = std::max(safe_min, safe_min * max_off2 / eps);

    TridiagonalEigenResult out;
    out.values.resize(count);
    out.vectors.assign(count, std::vector<double>(n));
    out.residuals.resize(count);

    // Bisection on the Sturm count isolates each of the lowest eigenvalues.
    for (int j = 0; j < count; ++j) {
        double lo = lo0, hi = hi0;
        for (int it = 0; it < 200 && (hi - lo) > 2.0 * eps * (std::abs(lo) + std::abs(hi));
             ++it) {
            const double mid = 0.5 * (lo + hi);
            if (T.eigenvalues_below(mid) >= j + 1)
                hi = mid;
            else
                lo = mid;
        }
        out.values[j] = 0.5 * (lo + hi);
    }

    // Inverse iteration per eigenvalue; vectors in a near-degenerate cluster
    // are orthogonalized against each other every sweep.
    const double cluster_gap = 1e-10 * scale;
    int cluster_start = 0;
    for (int j = 0; j < count; ++j) {
        if (j > 0 && out.values[j] - out.values[j - 1] > cluster_gap) cluster_start = j;
        const ShiftedFactor factor(T, out.values[j], pivmin);

        std::uint64_t rng = 0x243f6a8885a308d3ULL + static_cast<std::uint64_t>(j);
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = hash_unit(rng);
        double nv = norm2(v);
        for (double& x : v) x /= nv;

        bool converged = false;
        double resid = std::numeric_limits<double>::infinity();
        for (int sweep = 0; sweep < opt.max_iterations; ++sweep) {
            factor.solve(v);
            for (int c = cluster_start; c < j; ++c) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += v[i] * out.vectors[c][i];
                for (int i = 0; i < n; ++i) v[i] -= dot * out.vectors[c][i];
            }
            nv = norm2(v);
            if (!(nv > 0.0) || !std::isfinite(nv)) {
                // Orthogonalization annihilated the iterate; restart.
                for (int i = 0; i < n; ++i) v[i] = hash_unit(rng);
                nv = norm2(v);
            }
            for (double& x : v) x /= nv;

            const std::vector<double> Tv = T.apply(v);
            double r2 = 0.0;
            for (int i = 0; i < n; ++i) {
                const double r = Tv[i] - out.values[j] * v[i];
                r2 += r * r;
            }
            resid = std::sqrt(r2) / scale;
            if (resid <= opt.residual_tol) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw NonConvergenceError(
                "solve_lowest: inverse iteration stalled at eigenvalue index " +
                std::to_string(j) + " (residual " + std::to_string(resid) + ")");

        // Sign convention: first component of significant size is positive.
        double vmax = 0.0;
        for (double x : v) vmax = std::max(vmax, std::abs(x));
        for (int i = 0; i < n; ++i) {
            if (std::abs(v[i]) > 0.01 * vmax) {
                if (v[i] < 0.0)
                    for (double& x : v) x = -x;
                break;
            }
        }
        out.residuals[j] = resid;
        out.vectors[j] = std::move(v);
    }
    return out;
}

}  // namespace hcpair::numeric
