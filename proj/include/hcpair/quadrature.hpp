#pragma once

#include <functional>
#include <span>

namespace hcpair {

// Adaptive Simpson integration of f over [a, b] to absolute tolerance
// abs_tol. Recursion stops when the local Richardson error estimate is below
// the locally apportioned tolerance; depth is capped at max_depth.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 48);

// Trapezoid rule on uniformly spaced samples (spacing dx).
double trapezoid(std::span<const double> samples, double dx);

}  // namespace hcpair
