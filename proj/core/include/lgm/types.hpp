#pragma once

// Value types shared by every lgm module.
//
// Conventions used throughout the library:
//   * sequences are indexed from 1 and carry an implicit zero tail;
//   * step functions live on (0, inf) with left-open/right-closed pieces
//     (x_{j-1}, x_j], x_0 = 0, and vanish beyond the last breakpoint;
//   * an infinite Lebesgue exponent is an explicit marker, never a float.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lgm {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

bool is_finite(Complex z) noexcept;

// Finite-support complex sequence a_1..a_N, zero for n > N.
class ComplexSeq {
public:
    ComplexSeq() = default;
    explicit ComplexSeq(std::vector<Complex> values);

    static ComplexSeq from_real(std::span<const double> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    // 1-based access; n > size() yields 0. n == 0 is a precondition violation.
    Complex at(std::size_t n) const;
    double modulus(std::size_t n) const { return std::abs(at(n)); }

    std::span<const Complex> values() const noexcept { return values_; }

    ComplexSeq scaled(Complex factor) const;

private:
    std::vector<Complex> values_;
};

// Sequence indexed by -N..N (zero outside), used for Fourier coefficients.
class TwoSidedSeq {
public:
    TwoSidedSeq() = default;
    // values[k] holds index k - half_width.
    TwoSidedSeq(int half_width, std::vector<Complex> values);

    int half_width() const noexcept { return half_width_; }
    Complex at(int n) const noexcept;
    std::span<const Complex> values() const noexcept { return values_; }

private:
    int half_width_ = -1;
    std::vector<Complex> values_;
};

// Piecewise-constant function: value v_j on (x_{j-1}, x_j], x_0 = 0.
class StepFunction {
public:
    StepFunction() = default;
    StepFunction(std::vector<double> breakpoints, std::vector<Complex> values);

    std::size_t pieces() const noexcept { return breakpoints_.size(); }
    bool empty() const noexcept { return breakpoints_.empty(); }

    std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    std::span<const Complex> values() const noexcept { return values_; }

    // Endpoints of the 0-based piece j.
    double left(std::size_t j) const noexcept { return j == 0 ? 0.0 : breakpoints_[j - 1]; }
    double right(std::size_t j) const noexcept { return breakpoints_[j]; }

    double support_end() const noexcept { return empty() ? 0.0 : breakpoints_.back(); }

    // f(x) for x > 0.
    Complex operator()(double x) const;

private:
    std::vector<double> breakpoints_;
    std::vector<Complex> values_;
};

// f(x) = coeff * x^exponent on (0, end].
struct PowerHead {
    double coeff = 1.0;
    double exponent = 1.0;
    double end = 1.0;
};

// Step function optionally preceded by a power-law head. The steps occupy
// (start(), x_1], (x_1, x_2], ... where start() is the head end (or 0).
class HeadedStepFunction {
public:
    HeadedStepFunction() = default;
    HeadedStepFunction(StepFunction steps);  // NOLINT: implicit, no head
    HeadedStepFunction(PowerHead head, std::vector<double> breakpoints,
                       std::vector<Complex> values);

    const std::optional<PowerHead>& head() const noexcept { return head_; }
    bool has_head() const noexcept { return head_.has_value(); }

    double start() const noexcept { return head_ ? head_->end : 0.0; }
    std::size_t pieces() const noexcept { return breakpoints_.size(); }
    std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    std::span<const Complex> values() const noexcept { return values_; }
    double left(std::size_t j) const noexcept { return j == 0 ? start() : breakpoints_[j - 1]; }
    double right(std::size_t j) const noexcept { return breakpoints_[j]; }

    double support_end() const noexcept;

    Complex operator()(double x) const;

    // The steps as a plain StepFunction; only valid without a head.
    StepFunction as_step() const;

private:
    std::optional<PowerHead> head_;
    std::vector<double> breakpoints_;
    std::vector<Complex> values_;
};

// The cone S_{alpha,phi} = {0} u {z : |arg(e^{-i alpha} z)| <= phi}.
class Sector {
public:
    Sector(double alpha, double phi, double tol = 1e-12);

    double alpha() const noexcept { return alpha_; }
    double phi() const noexcept { return phi_; }
    double tol() const noexcept { return tol_; }

    bool contains(Complex z) const noexcept;

private:
    double alpha_;
    double phi_;
    double tol_;
};

bool sector_contains(Complex z, const Sector& s) noexcept;

// Extended positive real in (0, inf].
class Exponent {
public:
    Exponent(double value);  // NOLINT: implicit from finite positive double
    static Exponent infinity() noexcept { return Exponent(); }

    bool is_infinite() const noexcept { return infinite_; }
    double value() const;            // throws for infinity
    double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

    friend bool operator==(const Exponent&, const Exponent&) = default;

private:
    Exponent() noexcept : value_(0.0), infinite_(true) {}
    double value_;
    bool infinite_;
};

inline const Exponent kInfinity = Exponent::infinity();

// Lebesgue pair (p, q). Weighted norms accept any pair in (0, inf]^2; the
// Lorentz quasi-norm additionally needs 0 < p < inf or p = q = inf.
struct PQ {
    Exponent p;
    Exponent q;

    bool lorentz_admissible() const noexcept {
        return !p.is_infinite() || q.is_infinite();
    }
    // Conjugate exponent p' with 1/p + 1/p' = 1 (requires 1 < p < inf).
    static double conjugate(double p);
};

// w(p,q)(x) = x^{1/p - 1/q}.
double weight_pq(const PQ& pq, double x);

// f(x) = a_{ceil(x)} on (0, N].
StepFunction sequence_to_step(const ComplexSeq& a);

}  // namespace lgm
