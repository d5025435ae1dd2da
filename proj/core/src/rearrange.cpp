#include "lgm/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace lgm {

DecreasingStep::DecreasingStep(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() != values_.size())
        throw std::invalid_argument("DecreasingStep: breakpoints and values differ in length");
    double prev_x = 0.0;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!(breakpoints_[j] > prev_x) || !std::isfinite(breakpoints_[j]))
            throw std::invalid_argument("DecreasingStep: breakpoints must increase strictly");
        if (!(values_[j] >= 0.0) || !std::isfinite(values_[j]))
            throw std::invalid_argument("DecreasingStep: values must be finite and nonnegative");
        if (j > 0 && values_[j] > values_[j - 1])
            throw std::invalid_argument("DecreasingStep: values must be non-increasing");
        prev_x = breakpoints_[j];
    }
}

double DecreasingStep::operator()(double x) const {
    if (x < 0.0) throw std::domain_error("DecreasingStep: x must be >= 0");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.end()) return 0.0;
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

StepFunction DecreasingStep::to_step() const {
    return StepFunction(breakpoints_, std::vector<Complex>(values_.begin(), values_.end()));
}

double distribution(const StepFunction& f, double alpha) {
    if (!(alpha >= 0.0)) throw std::domain_error("distribution: alpha must be >= 0");
    double measure = 0.0;
    for (std::size_t j = 0; j < f.pieces(); ++j)
        if (std::abs(f.values()[j]) > alpha) measure += f.right(j) - f.left(j);
    return measure;
}

double distribution(const DecreasingStep& f, double alpha) {
    if (!(alpha >= 0.0)) throw std::domain_error("distribution: alpha must be >= 0");
    // {f* > alpha} = [0, x_j) for the last j with v_j > alpha.
    const auto& v = f.values();
    auto it = std::partition_point(v.begin(), v.end(), [alpha](double x) { return x > alpha; });
    if (it == v.begin()) return 0.0;
    return f.breakpoints()[static_cast<std::size_t>(it - v.begin()) - 1];
}

double distribution(const ComplexSeq& a, double alpha) {
    if (!(alpha >= 0.0)) throw std::domain_error("distribution: alpha must be >= 0");
    double count = 0.0;
    for (const auto& z : a.values())
        if (std::abs(z) > alpha) count += 1.0;
    return count;
}

DecreasingStep rearrange_step(const StepFunction& f) {
    struct Piece {
        double modulus;
        double length;
    };
    std::vector<Piece> pieces;
    pieces.reserve(f.pieces());
    for (std::size_t j = 0; j < f.pieces(); ++j) {
        const double m = std::abs(f.values()[j]);
        if (m > 0.0) pieces.push_back({m, f.right(j) - f.left(j)});
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return a.modulus > b.modulus; });

    std::vector<double> bp, vals;
    double x = 0.0;
    for (std::size_t i = 0; i < pieces.size();) {
        const double m = pieces[i].modulus;
        for (; i < pieces.size() && pieces[i].modulus == m; ++i) x += pieces[i].length;
        bp.push_back(x);
        vals.push_back(m);
    }
    return DecreasingStep(std::move(bp), std::move(vals));
}

std::vector<double> rearrange_seq(const ComplexSeq& a) {
    std::vector<double> m(a.size());
    std::transform(a.values().begin(), a.values().end(), m.begin(),
                   [](Complex z) { return std::abs(z); });
    std::sort(m.begin(), m.end(), std::greater<>());
    return m;
}

double left_limit(const DecreasingStep& fstar, double x) {
    if (!(x > 0.0)) throw std::domain_error("left_limit: x must be > 0");
    const auto& bp = fstar.breakpoints();
    // Piece (x_{j-1}, x_j] containing x gives the limit from the left.
    auto it = std::lower_bound(bp.begin(), bp.end(), x);
    if (it == bp.end()) return 0.0;
    return fstar.values()[static_cast<std::size_t>(it - bp.begin())];
}

}  // namespace lgm
