#pragma once

// Hardy's averaging transform on nonnegative headed step functions.

#include "lgm/quadrature.hpp"
#include "lgm/report.hpp"
#include "lgm/types.hpp"

namespace lgm {

// I(x) = int_0^x f(t) dt/t. Throws if f is complex or negative, or if f is
// nonzero on a piece reaching 0 without a power head (I diverges).
double hardy_inner(const HeadedStepFunction& f, double x);

// (int_0^inf (x^{-alpha} I(x))^q dx/x)^{1/q}; sup for q = inf. Closed forms
// on the head and on (x_M, inf), Gauss quadrature in ln x on the steps.
// Returns +inf when the head integral diverges.
QuadValue hardy_lhs(const HeadedStepFunction& f, double alpha, Exponent q, double rel_tol = 1e-10);

// (int_0^inf (x^{-alpha} f(x))^q dx/x)^{1/q}.
double hardy_rhs(const HeadedStepFunction& f, double alpha, Exponent q);

struct HardyReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double drift = 0.0;  // relative change of lhs between tolerances 1e-6 and 1e-10
    bool converged = true;
    bool vacuous = false;  // rhs = inf

    // Finite, converged and stable to 1% (or vacuous).
    bool stable() const noexcept;
};

HardyReport hardy_report(const HeadedStepFunction& f, double alpha, Exponent q);

// Envelope for the Hardy ratio. For q >= 1 the classical constant 1/alpha
// (valid for every f >= 0); for q < 1 the bound ln2 * B1 * (2^{alpha q} - 1)^{-1/q}
// from dyadic blocking, where B1 is the GM_1 constant of f.
double hardy_envelope(double alpha, Exponent q, double gm1_constant);

// The substitution g(t) = t^{eps - alpha} f(t) that reduces alpha > 1 to
// eps < 1, for head-only f. Default eps = min(1/2, gamma/2).
HeadedStepFunction hardy_shift(const HeadedStepFunction& f, double alpha, double eps);
double hardy_default_eps(const HeadedStepFunction& f);

// Pointwise product on the common refinement. Representable when both
// heads end at the same point, or when a headless factor is a positive
// constant on the other factor's head; throws otherwise.
HeadedStepFunction product_step(const HeadedStepFunction& f, const HeadedStepFunction& g);

// Measured GM constant of f g against 4 B1 B2 (constants clamped to >= 1).
VerificationReport gm_product_report(const HeadedStepFunction& f, const HeadedStepFunction& g);

}  // namespace lgm
