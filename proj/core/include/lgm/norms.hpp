#pragma once

// Weighted L^q / l^q norms, Lorentz quasi-norms and dyadic discretisations.
// Every step-function norm is evaluated in closed form piece by piece.

#include <vector>

#include "lgm/rearrange.hpp"
#include "lgm/report.hpp"
#include "lgm/types.hpp"

namespace lgm {

// (sum_n |a_n|^q n^{q/p - 1})^{1/q}; sup_n n^{1/p} |a_n| for q = inf.
double weighted_norm_seq(const ComplexSeq& a, const PQ& pq);

// ||x^s f||_{L^q((0,inf), dx/x)}. Returns +inf when the integral diverges
// (power head with (gamma + s) q <= 0, or s <= 0 with f nonzero near 0).
double power_weighted_norm(const HeadedStepFunction& f, double s, Exponent q);

// ||f||_{L^q_{w(p,q)}} = ||x^{1/p} f||_{L^q(dx/x)}.
double weighted_norm_step(const HeadedStepFunction& f, const PQ& pq);

// Lorentz quasi-norms: the weighted norm of the decreasing rearrangement.
double lorentz_norm_seq(const ComplexSeq& a, const PQ& pq);
double lorentz_norm_step(const StepFunction& f, const PQ& pq);

struct DyadicRange {
    int lo;
    int hi;
};

// (sum_{k in range} 2^{kq/p} |f(2^k)|^q)^{1/q}; sup for q = inf.
double dyadic_norm(const StepFunction& f, const PQ& pq, DyadicRange range);
double dyadic_norm(const DecreasingStep& f, const PQ& pq, DyadicRange range);

// Smallest range whose right end reaches the support and whose left end is
// the last dyadic point inside the first piece.
DyadicRange minimal_dyadic_range(const StepFunction& f);

// The same sums over all k in Z. Below the first breakpoint f is constant,
// so the k -> -inf tail is summed as a geometric series.
double dyadic_norm_full(const StepFunction& f, const PQ& pq);
double dyadic_norm_full(const DecreasingStep& f, const PQ& pq);

// The four equivalent quantities for a GM_1 step function together with
// the explicit-constant inequalities that relate them.
struct EquivalenceReport {
    double lorentz = 0.0;            // ||f||_{L(p,q)}
    double dyadic_rearranged = 0.0;  // dyadic sum of f*
    double dyadic = 0.0;             // dyadic sum of |f|
    double weighted = 0.0;           // ||f||_{L^q_{w(p,q)}}
    double gm1_constant = 0.0;
    std::vector<VerificationReport> checks;

    bool pass() const;
};

// Constant A(p,q) = max{2^{q/p-1}, 4^{q/p-1}}.
double dyadic_shift_constant(double p, double q);

// Requires finite p and a finite GM_1 constant B (throws otherwise).
EquivalenceReport equivalence_report(const StepFunction& f, const PQ& pq, double B);

}  // namespace lgm
