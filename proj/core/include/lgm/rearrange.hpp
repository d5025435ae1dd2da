#pragma once

// Distribution functions and decreasing rearrangements.

#include <vector>

#include "lgm/types.hpp"

namespace lgm {

// Non-increasing nonnegative step function on (0, inf). Evaluation is
// right-continuous: the value v_j is held on [x_{j-1}, x_j), matching the
// infimum definition f*(x) = inf{a : f_*(a) <= x} at breakpoints.
class DecreasingStep {
public:
    DecreasingStep() = default;
    DecreasingStep(std::vector<double> breakpoints, std::vector<double> values);

    std::size_t pieces() const noexcept { return breakpoints_.size(); }
    const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double support_end() const noexcept { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }

    double operator()(double x) const;

    // Same pieces as a left-open/right-closed StepFunction (differs only at
    // the breakpoints, a null set).
    StepFunction to_step() const;

    friend bool operator==(const DecreasingStep&, const DecreasingStep&) = default;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

// Lebesgue measure of {|f| > alpha}.
double distribution(const StepFunction& f, double alpha);
double distribution(const DecreasingStep& f, double alpha);
// Count of {n : |a_n| > alpha}.
double distribution(const ComplexSeq& a, double alpha);

// Sorts pieces by modulus, merges equal moduli and drops zero pieces.
DecreasingStep rearrange_step(const StepFunction& f);

// Moduli sorted in non-increasing order; a*_k for k = 1..N.
std::vector<double> rearrange_seq(const ComplexSeq& a);

// lim_{y -> x-} f*(y); zero past the support.
double left_limit(const DecreasingStep& fstar, double x);

}  // namespace lgm
