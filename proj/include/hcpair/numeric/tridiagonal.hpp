#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hcpair::numeric {

// Thrown when an iterative eigensolve fails to reach tolerance. Mapped to its
// own process exit code by the command-line tool.
class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
class SymmetricTridiagonal {
public:
    SymmetricTridiagonal(std::vector<double> diag, std::vector<double> off);

    int n() const { return static_cast<int>(diag_.size()); }
    const std::vector<double>& diag() const { return diag_; }
    const std::vector<double>& off() const { return off_; }

    // y = T x
    std::vector<double> apply(const std::vector<double>& x) const;

    // Number of eigenvalues strictly below x (Sturm sequence count).
    int eigenvalues_below(double x) const;

    // Gershgorin bounds [lo, hi] containing the whole spectrum.
    void spectral_bounds(double* lo, double* hi) const;

    // Scale used to make residuals dimensionless: max Gershgorin row sum.
    double norm_bound() const;

private:
    std::vector<double> diag_;
    std::vector<double> off_;
};

struct EigenSolveOptions {
    int max_iterations = 40;       // inverse-iteration sweeps per vector
    double residual_tol = 1e-10;   // on ||T v - w v|| / (norm_bound * ||v||)
};

// Lowest `count` eigenpairs by bisection on the Sturm count plus inverse
// iteration. Eigenvalues ascend strictly (an unreduced symmetric tridiagonal
// matrix has simple spectrum); vectors have unit 2-norm, mutually
// orthogonalized inside near-degenerate clusters, sign fixed so the first
// component of significant size is positive.
struct TridiagonalEigenResult {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
    std::vector<double> residuals;  // dimensionless, one per pair
};

TridiagonalEigenResult solve_lowest(const SymmetricTridiagonal& T, int count,
                                    const EigenSolveOptions& opt = {});

}  // namespace hcpair::numeric
