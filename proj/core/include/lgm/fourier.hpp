#pragma once

// Trigonometric polynomials with given coefficients: partial sums, the
// pointwise and integral bounds for general monotone coefficients, step
// function coefficients, Cesaro means and duality ratios.

#include <span>
#include <vector>

#include "lgm/quadrature.hpp"
#include "lgm/report.hpp"
#include "lgm/types.hpp"

namespace lgm {

// sum_{k=m}^{N} c_k e^{ikx} by direct summation.
Complex partial_sum(const ComplexSeq& c, std::size_t m, std::size_t N, double x);

// f_N(x) = sum_{k=1}^{N} c_k e^{ikx}, N = c.size(), by Horner's rule.
Complex trig_eval(const ComplexSeq& c, double x);

// n equally spaced points i pi / n, i = 1..n.
std::vector<double> uniform_grid(std::size_t n);

// |sum_{k=m}^N a_k e^{ikx}| <= (4 pi / x)(|a_m|/2 + sum_{k=m}^{N-1} |a_{k+1} - a_k|).
// Reports the grid point with the largest lhs/rhs ratio.
VerificationReport dirichlet_bound_report(const ComplexSeq& c, std::size_t m, std::size_t N,
                                          std::span<const double> x_grid);

// |sum_{k=m}^N a_k e^{ikx}| <= (6 pi B / x)(|a_m| + sum_{k=m+1}^N |a_k|/k).
VerificationReport gm_series_bound_report(const ComplexSeq& c, std::size_t m, std::size_t N,
                                          std::span<const double> x_grid, double B);

// int_0^pi |f_N(x)| dx, globally adaptive Gauss-Kronrod over 4N initial panels.
QuadValue l1_norm_trig(const ComplexSeq& c, double rel_tol = 1e-8);

// ||f_N||_1 <= 2 pi |c_1| + 27 pi B sum_{k>=2} |c_k| ln(k)/k, B = max(1, gms2).
VerificationReport l1_bound_report(const ComplexSeq& c, double rel_tol = 1e-8);

// |f_N| sampled at the midpoints of M uniform cells of (0, pi), M even.
std::vector<double> sample_modulus(const ComplexSeq& c, std::size_t M);

struct WeakL1Estimate {
    double value = 0.0;
    std::size_t samples = 0;
    bool converged = true;
};

// sup_alpha alpha * |{x in (0,pi) : |f_N(x)| > alpha}| with alpha restricted
// to the sampled levels. Starts at 2^16 samples and doubles until two
// successive estimates agree to 0.1%.
WeakL1Estimate weak_l1_estimate(const ComplexSeq& c, std::size_t max_samples = std::size_t{1} << 22);

// ||f_N||_{L(1,inf)} <= 6 pi B ||c||_{l^1_{1/k}}, B = max(1, gms2).
VerificationReport weak_l1_report(const ComplexSeq& c);

// c_n = (1/2pi) int_0^{2pi} f e^{-int} dt, n = -n_max..n_max, in closed form.
// f must vanish beyond 2 pi.
TwoSidedSeq fourier_coeffs_step(const StepFunction& f, int n_max);

// (1/(2n+1)) sum_{k=-n}^{n} c_k.
Complex cesaro_mean(const TwoSidedSeq& c, int n);

// sum over all n in Z of |c_n|^2 for the coefficients of f, summed in closed
// form from the jumps of the 2 pi periodic extension.
double coefficient_energy(const StepFunction& f);

// (1/2pi) int_0^{2pi} |f|^2.
double mean_square(const StepFunction& f);

struct DualityReport {
    double sequence_norm = 0.0;  // ||c||_{l(p',q)}
    double function_norm = 0.0;  // empirical ||f_N||_{L(p,q)(0,pi)}
    double ratio = 0.0;          // sequence_norm / function_norm
    double drift = 0.0;          // relative change at the last grid doubling
    std::size_t samples = 0;
    bool converged = true;
};

// Empirical L(p,q)(0,pi) quasi-norm of |f_N| from M sorted samples.
double sampled_lorentz_norm(const ComplexSeq& c, const PQ& pq, std::size_t M);

// Requires 1 < p < inf. Doubles the sample count (from max(2^12, 16N))
// until the ratio drifts by less than drift_tol.
DualityReport duality_ratio(const ComplexSeq& c, const PQ& pq, double drift_tol = 0.01,
                            std::size_t max_samples = std::size_t{1} << 21);

}  // namespace lgm
