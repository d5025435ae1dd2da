#include "lgm/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lgm {

bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

ComplexSeq::ComplexSeq(std::vector<Complex> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!is_finite(values_[i]))
            throw std::invalid_argument("ComplexSeq: non-finite entry at index " +
                                        std::to_string(i + 1));
    }
}

ComplexSeq ComplexSeq::from_real(std::span<const double> values) {
    std::vector<Complex> v(values.begin(), values.end());
    return ComplexSeq(std::move(v));
}

Complex ComplexSeq::at(std::size_t n) const {
    if (n == 0) throw std::out_of_range("ComplexSeq: indices start at 1");
    return n <= values_.size() ? values_[n - 1] : Complex{};
}

ComplexSeq ComplexSeq::scaled(Complex factor) const {
    std::vector<Complex> v(values_);
    for (auto& z : v) z *= factor;
    return ComplexSeq(std::move(v));
}

TwoSidedSeq::TwoSidedSeq(int half_width, std::vector<Complex> values)
    : half_width_(half_width), values_(std::move(values)) {
    if (half_width < 0 || values_.size() != static_cast<std::size_t>(2 * half_width + 1))
        throw std::invalid_argument("TwoSidedSeq: expected 2N+1 values");
}

Complex TwoSidedSeq::at(int n) const noexcept {
    if (half_width_ < 0 || n < -half_width_ || n > half_width_) return {};
    return values_[static_cast<std::size_t>(n + half_width_)];
}

namespace {

void check_partition(std::span<const double> breakpoints, double start, const char* who) {
    double prev = start;
    for (double x : breakpoints) {
        if (!std::isfinite(x) || !(x > prev))
            throw std::invalid_argument(std::string(who) +
                                        ": breakpoints must be finite, positive and strictly increasing");
        prev = x;
    }
}

void check_values(std::span<const Complex> values, const char* who) {
    for (const auto& v : values)
        if (!is_finite(v)) throw std::invalid_argument(std::string(who) + ": non-finite value");
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<Complex> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() != values_.size())
        throw std::invalid_argument("StepFunction: breakpoints and values differ in length");
    check_partition(breakpoints_, 0.0, "StepFunction");
    check_values(values_, "StepFunction");
}

Complex StepFunction::operator()(double x) const {
    if (!(x > 0.0)) throw std::domain_error("StepFunction: evaluation point must be > 0");
    // First breakpoint with x <= x_j: piece (x_{j-1}, x_j].
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.end()) return {};
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

HeadedStepFunction::HeadedStepFunction(StepFunction steps)
    : breakpoints_(steps.breakpoints().begin(), steps.breakpoints().end()),
      values_(steps.values().begin(), steps.values().end()) {}

HeadedStepFunction::HeadedStepFunction(PowerHead head, std::vector<double> breakpoints,
                                       std::vector<Complex> values)
    : head_(head), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (!(head.coeff > 0.0) || !std::isfinite(head.coeff))
        throw std::invalid_argument("HeadedStepFunction: head coefficient must be > 0");
    if (!(head.exponent > 0.0) || !std::isfinite(head.exponent))
        throw std::invalid_argument("HeadedStepFunction: head exponent must be > 0");
    if (!(head.end > 0.0) || !std::isfinite(head.end))
        throw std::invalid_argument("HeadedStepFunction: head end must be > 0");
    if (breakpoints_.size() != values_.size())
        throw std::invalid_argument("HeadedStepFunction: breakpoints and values differ in length");
    check_partition(breakpoints_, head.end, "HeadedStepFunction");
    check_values(values_, "HeadedStepFunction");
}

double HeadedStepFunction::support_end() const noexcept {
    if (!breakpoints_.empty()) return breakpoints_.back();
    return start();
}

Complex HeadedStepFunction::operator()(double x) const {
    if (!(x > 0.0)) throw std::domain_error("HeadedStepFunction: evaluation point must be > 0");
    if (head_ && x <= head_->end) return head_->coeff * std::pow(x, head_->exponent);
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.end()) return {};
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

StepFunction HeadedStepFunction::as_step() const {
    if (head_) throw std::logic_error("HeadedStepFunction::as_step: function has a power head");
    return StepFunction(breakpoints_, values_);
}

Sector::Sector(double alpha, double phi, double tol) : alpha_(alpha), phi_(phi), tol_(tol) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("Sector: alpha must be finite");
    if (!(phi >= 0.0) || !(phi < kPi / 2))
        throw std::invalid_argument("Sector: phi must lie in [0, pi/2)");
    if (!(tol >= 0.0)) throw std::invalid_argument("Sector: tol must be nonnegative");
    alpha_ = std::fmod(alpha, 2 * kPi);
    if (alpha_ < 0) alpha_ += 2 * kPi;
}

bool Sector::contains(Complex z) const noexcept {
    if (z == Complex{}) return true;
    const double rotated = std::arg(std::polar(1.0, -alpha_) * z);
    return std::abs(rotated) <= phi_ + tol_;
}

bool sector_contains(Complex z, const Sector& s) noexcept { return s.contains(z); }

Exponent::Exponent(double value) : value_(value), infinite_(false) {
    if (!std::isfinite(value) || !(value > 0.0))
        throw std::invalid_argument("Exponent: expected a finite positive value "
                                    "(use Exponent::infinity() for inf)");
}

double Exponent::value() const {
    if (infinite_) throw std::logic_error("Exponent::value: exponent is infinite");
    return value_;
}

double PQ::conjugate(double p) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("PQ::conjugate: requires 1 < p < inf");
    return p / (p - 1.0);
}

double weight_pq(const PQ& pq, double x) {
    if (!(x > 0.0)) throw std::domain_error("weight_pq: x must be > 0");
    return std::pow(x, pq.p.reciprocal() - pq.q.reciprocal());
}

StepFunction sequence_to_step(const ComplexSeq& a) {
    std::vector<double> bp(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) bp[n] = static_cast<double>(n + 1);
    return StepFunction(std::move(bp), std::vector<Complex>(a.values().begin(), a.values().end()));
}

}  // namespace lgm
