#pragma once

#include <functional>
#include <span>

namespace lgm {

// Result of a numerical integration: value plus whether the requested
// tolerance was met before the bisection depth cap.
struct QuadValue {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

// Bisection depth cap: LORENTZ_GM_MAX_DEPTH if set to a positive integer,
// otherwise 40.
int max_bisection_depth();

// Adaptive 16-point Gauss-Legendre with interval bisection. A panel is
// accepted once the whole-panel and two-half estimates agree to rel_tol
// (relative to the running total over [a, b]).
QuadValue integrate_gauss(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, int max_depth = max_bisection_depth());

// Globally adaptive Gauss-Kronrod 7/15 over an initial partition; the panel
// with the largest error estimate is bisected until the summed error is
// below rel_tol * |integral|.
QuadValue integrate_gk_global(const std::function<double(double)>& f,
                              std::span<const double> initial_breaks, double rel_tol,
                              int max_depth = max_bisection_depth());

}  // namespace lgm
