#include "lgm/random.hpp"

#include <algorithm>
#include <cmath>

#include "lgm/gm.hpp"

namespace lgm {

double Rng::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

double Rng::log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

bool Rng::chance(double p) { return uniform(0.0, 1.0) < p; }

StepFunction random_dyadic_step(Rng& rng, std::size_t pieces) {
    std::vector<double> bp;
    std::vector<Complex> vals;
    std::int64_t ticks = 0;
    for (std::size_t j = 0; j < pieces; ++j) {
        ticks += rng.integer(1, 40);
        bp.push_back(static_cast<double>(ticks) / 64.0);
        const double r = static_cast<double>(rng.integer(0, 16)) / 8.0;
        vals.push_back(std::polar(r, rng.uniform(0.0, 2 * kPi)));
    }
    return StepFunction(std::move(bp), std::move(vals));
}

ComplexSeq random_gms_sector(Rng& rng, std::size_t N, double alpha, double phi, double max_B) {
    for (;;) {
        const double beta = rng.uniform(0.2, 1.5);
        double w = 0.0, s = rng.uniform(-1.0, 1.0);
        std::vector<Complex> a(N);
        for (std::size_t n = 1; n <= N; ++n) {
            const double dn = static_cast<double>(n);
            w = std::clamp(w + rng.uniform(-0.3, 0.3) / dn, -0.5, 0.5);
            s = std::clamp(s + rng.uniform(-0.2, 0.2) / dn, -1.0, 1.0);
            a[n - 1] = std::polar(std::pow(dn, -beta) * std::exp(w), alpha + phi * s);
        }
        if (N > 2 && rng.chance(0.5)) {
            const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(N) - 1));
            a[k] *= rng.uniform(1.0, 2.0);
        }
        ComplexSeq out(std::move(a));
        if (gms_constant(out).constant <= max_B) return out;
    }
}

ComplexSeq random_gms1(Rng& rng, std::size_t N) {
    const double beta = rng.uniform(0.0, 1.5);
    const bool real = rng.chance(0.5);
    std::vector<Complex> a(N);
    for (std::size_t n = 1; n <= N; ++n) {
        const double r = std::pow(static_cast<double>(n), -beta) * rng.uniform(1.0, 2.0);
        a[n - 1] = real ? Complex(r) : std::polar(r, rng.uniform(0.0, 2 * kPi));
    }
    return ComplexSeq(std::move(a));
}

ComplexSeq random_gms2(Rng& rng, std::size_t N) {
    const double alpha = rng.uniform(0.0, 2 * kPi);
    const double phi = rng.uniform(0.0, kPi / 3);
    return random_gms_sector(rng, N, alpha, phi);
}

ComplexSeq random_complex_seq(Rng& rng, std::size_t N) {
    std::vector<Complex> a(N);
    for (auto& z : a) z = std::polar(rng.uniform(0.0, 1.0), rng.uniform(0.0, 2 * kPi));
    return ComplexSeq(std::move(a));
}

namespace {

std::vector<double> geometric_breakpoints(Rng& rng, std::size_t pieces, double lo, double hi) {
    std::vector<double> bp;
    double x = rng.log_uniform(0.01, 1.0);
    for (std::size_t j = 0; j < pieces; ++j) {
        bp.push_back(x);
        x *= rng.uniform(lo, hi);
    }
    return bp;
}

}  // namespace

StepFunction random_gm1_step(Rng& rng, std::size_t pieces) {
    auto bp = geometric_breakpoints(rng, pieces, 1.05, 2.0);
    const double beta = rng.uniform(0.0, 1.5);
    const bool real = rng.chance(0.5);
    std::vector<Complex> vals;
    for (double x : bp) {
        const double r = std::pow(x, -beta) * rng.uniform(1.0, 2.0);
        vals.push_back(real ? Complex(r) : std::polar(r, rng.uniform(0.0, 2 * kPi)));
    }
    return StepFunction(std::move(bp), std::move(vals));
}

StepFunction random_gm_sector_step(Rng& rng, std::size_t pieces, double alpha, double phi) {
    auto bp = geometric_breakpoints(rng, pieces, 1.1, 2.0);
    double r = 1.0, s = rng.uniform(-1.0, 1.0);
    std::vector<Complex> vals;
    for (std::size_t j = 0; j < pieces; ++j) {
        vals.push_back(std::polar(r, alpha + phi * s));
        r *= std::exp(rng.uniform(-0.4, 0.25));
        s = std::clamp(s + rng.uniform(-0.3, 0.3), -1.0, 1.0);
    }
    return StepFunction(std::move(bp), std::move(vals));
}

HeadedStepFunction random_gm_plus(Rng& rng, std::size_t pieces, double gamma_lo, double gamma_hi) {
    PowerHead h;
    h.exponent = rng.uniform(gamma_lo, gamma_hi);
    h.end = rng.log_uniform(0.1, 2.0);
    h.coeff = rng.log_uniform(0.5, 2.0);
    std::vector<double> bp;
    std::vector<Complex> vals;
    double x = h.end;
    double v = h.coeff * std::pow(h.end, h.exponent) * rng.uniform(0.5, 1.5);
    for (std::size_t j = 0; j < pieces; ++j) {
        x *= rng.uniform(1.1, 2.0);
        bp.push_back(x);
        vals.emplace_back(v);
        v *= std::exp(rng.uniform(-0.5, 0.3));
    }
    return HeadedStepFunction(h, std::move(bp), std::move(vals));
}

}  // namespace lgm
