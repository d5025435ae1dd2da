#include <cmath>

#include "doctest.h"
#include "lgm/gm.hpp"
#include "lgm/interpolate.hpp"
#include "lgm/norms.hpp"
#include "lgm/random.hpp"
#include "oracles.hpp"

using namespace lgm;
using doctest::Approx;

namespace {

ComplexSeq e1() { return ComplexSeq({1.0}); }

ComplexSeq ones(std::size_t N) { return ComplexSeq(std::vector<Complex>(N, 1.0)); }

// (int (t^{-theta} K(t))^q dt/t)^{1/q} by Simpson in u = ln t between the
// kinks of K, with the two power tails cut where they reach 1e-17.
double interpolation_norm_numeric(const ComplexSeq& c, double theta, double q) {
    const double N = static_cast<double>(c.size());
    auto g = [&](double u) { return std::pow(std::exp(-theta * u) * oracle::k_min(c, std::exp(u)), q); };
    double s = oracle::simpson(g, std::log(1 / N) - 40.0 / ((1 - theta) * q), std::log(1 / N), 4000);
    for (std::size_t n = c.size(); n > 1; --n)
        s += oracle::simpson(g, -std::log(static_cast<double>(n)), -std::log(n - 1.0), 200);
    s += oracle::simpson(g, 0.0, 40.0 / (theta * q), 4000);
    return std::pow(s, 1 / q);
}

// Simpson in u = ln t between the jumps {k, k/2} of the window sum.
double gilbert_numeric(const ComplexSeq& c, double theta, double q) {
    std::vector<double> cuts;
    for (std::size_t k = 1; k <= c.size(); ++k) {
        cuts.push_back(static_cast<double>(k));
        cuts.push_back(k / 2.0);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double s = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        const double S = oracle::window_sum(c, 0.5 * (cuts[i - 1] + cuts[i]));
        if (S == 0.0) continue;
        s += oracle::simpson([&](double u) { return std::pow(std::exp((theta - 1) * u) * S, q); },
                             std::log(cuts[i - 1]), std::log(cuts[i]), 200);
    }
    return std::pow(s, 1 / q);
}

}  // namespace

TEST_CASE("k-functional examples") {
    CHECK(k_functional(e1(), 0.5) == 0.5);
    CHECK(k_functional(ones(8), 0.25) == Approx(1.0 + 1.0 / 5 + 1.0 / 6 + 1.0 / 7 + 1.0 / 8).epsilon(1e-15));
    CHECK(k_functional(ones(8), 0.25) == Approx(1.634524).epsilon(5e-7));
    CHECK(k_functional(ComplexSeq(), 0.3) == 0.0);
    Rng rng(109);
    for (int i = 0; i < 50; ++i) {
        const auto c = random_complex_seq(rng, 40);
        double l1w = 0.0;
        for (std::size_t n = 1; n <= c.size(); ++n) l1w += c.modulus(n) / static_cast<double>(n);
        for (double t : {1.0, 2.0, 37.5}) CHECK(k_functional(c, t) == Approx(l1w).epsilon(1e-14));
    }
    CHECK_THROWS_AS(k_functional(e1(), 0.0), std::invalid_argument);
}

TEST_CASE("k-functional oracle examples") {
    CHECK(k_functional_oracle(ComplexSeq(), 0.5) == 0.0);
    CHECK(k_functional_oracle(ComplexSeq({0.0, 0.0}), 0.5) == 0.0);
    CHECK(k_functional_oracle(e1(), 2.0) == 1.0);
}

TEST_CASE("k-functional equals the coordinatewise infimum and the two-sum display") {
    Rng rng(113);
    for (int i = 0; i < 500; ++i) {
        const auto c = random_complex_seq(rng, static_cast<std::size_t>(rng.integer(1, 512)));
        const double t = rng.chance(0.25) ? 1.0 / static_cast<double>(rng.integer(1, 600)) : rng.log_uniform(1e-4, 10.0);
        const double k = k_functional(c, t);
        CHECK(k == Approx(k_functional_oracle(c, t)).epsilon(1e-12));
        CHECK(k == Approx(oracle::k_min(c, t)).epsilon(1e-12));
        CHECK(k == k_functional_display(c, t));
    }
}

TEST_CASE("k-functional shape on a log grid") {
    Rng rng(127);
    for (int i = 0; i < 100; ++i) {
        const auto c = random_complex_seq(rng, static_cast<std::size_t>(rng.integer(1, 200)));
        std::vector<double> t, k;
        for (int j = 0; j <= 300; ++j) {
            t.push_back(std::pow(10.0, -4.0 + j * 5.0 / 300));
            k.push_back(k_functional(c, t.back()));
        }
        for (std::size_t j = 1; j < t.size(); ++j) {
            CHECK(k[j] >= k[j - 1] * (1 - 1e-13));
            CHECK(k[j] / t[j] <= k[j - 1] / t[j - 1] * (1 + 1e-13));
        }
        for (std::size_t j = 1; j + 1 < t.size(); ++j) {
            // Chord below the graph.
            const double w = (t[j] - t[j - 1]) / (t[j + 1] - t[j - 1]);
            CHECK(k[j] >= ((1 - w) * k[j - 1] + w * k[j + 1]) * (1 - 1e-12));
        }
    }
}

TEST_CASE("interpolation norm examples") {
    const auto v = interpolation_norm(e1(), 0.5, 2.0);
    CHECK(v.converged);
    CHECK(v.value == Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(interpolation_norm(e1(), 0.5, kInfinity).value == Approx(1.0).epsilon(1e-15));
    CHECK(interpolation_norm(ComplexSeq(), 0.5, 2.0).value == 0.0);
    // K = min(1,t): (1/((1-theta) q) + 1/(theta q))^{1/q}.
    for (double theta : {0.2, 0.7})
        for (double q : {0.5, 1.0, 3.0})
            CHECK(interpolation_norm(e1(), theta, q).value ==
                  Approx(std::pow(1 / ((1 - theta) * q) + 1 / (theta * q), 1 / q)).epsilon(1e-10));
    CHECK_THROWS_AS(interpolation_norm(e1(), 1.5, 2.0), std::invalid_argument);
}

TEST_CASE("interpolation norm matches quadrature") {
    Rng rng(131);
    for (int i = 0; i < 30; ++i) {
        const auto c = random_complex_seq(rng, static_cast<std::size_t>(rng.integer(1, 20)));
        for (double theta : {0.3, 0.5, 0.8})
            for (double q : {0.5, 1.0, 2.0}) {
                const auto v = interpolation_norm(c, theta, q);
                CHECK(v.converged);
                CHECK(v.value == Approx(interpolation_norm_numeric(c, theta, q)).epsilon(1e-8));
            }
        for (double theta : {0.3, 0.8}) {
            double sup = 0.0;
            for (std::size_t n = 1; n <= c.size(); ++n) {
                const double t = 1.0 / static_cast<double>(n);
                sup = std::max(sup, std::pow(t, -theta) * oracle::k_min(c, t));
            }
            CHECK(interpolation_norm(c, theta, kInfinity).value == Approx(sup).epsilon(1e-12));
        }
    }
}

TEST_CASE("gilbert functional examples") {
    CHECK(gilbert_functional(e1(), 0.5, 1.0) == Approx(2 * (std::sqrt(2.0) - 1)).epsilon(1e-14));
    CHECK(gilbert_functional(ComplexSeq(), 0.5, 2.0) == 0.0);
    // Inner sum 1 on (1/2, 1]: the sup of t^{theta-1} is at t = 1/2.
    CHECK(gilbert_functional(e1(), 0.5, kInfinity) == Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("gilbert functional matches quadrature") {
    Rng rng(137);
    for (int i = 0; i < 50; ++i) {
        const auto c = random_complex_seq(rng, static_cast<std::size_t>(rng.integer(1, 40)));
        for (double theta : {0.25, 0.5, 0.75})
            for (double q : {0.5, 1.0, 2.0})
                CHECK(gilbert_functional(c, theta, q) == Approx(gilbert_numeric(c, theta, q)).epsilon(1e-10));
    }
}

TEST_CASE("gilbert functional against the weighted norm") {
    std::vector<Complex> h;
    for (int k = 1; k <= 256; ++k) h.emplace_back(1.0 / k);
    const ComplexSeq harmonic(h);
    const double B = gms1_constant(harmonic).constant;
    const double ratio = gilbert_functional(harmonic, 0.5, 2.0) / weighted_norm_seq(harmonic, PQ{2.0, 2.0});
    const auto shown = gilbert_bracket_displayed(0.5, 2.0, B);
    CHECK(ratio >= shown.lower);
    CHECK(ratio <= shown.upper);

    Rng rng(139);
    for (int i = 0; i < 100; ++i) {
        const auto c = random_gms1(rng, static_cast<std::size_t>(rng.integer(1, 300)));
        const double Bc = gms1_constant(c).constant;
        for (double theta : {0.25, 0.5, 0.75})
            for (double q : {0.5, 1.0, 2.0}) {
                const double r = gilbert_functional(c, theta, q) / weighted_norm_seq(c, PQ{1 / theta, q});
                const auto derived = gilbert_bracket(theta, q, Bc);
                const auto displayed = gilbert_bracket_displayed(theta, q, Bc);
                CHECK(r >= derived.lower * (1 - 1e-12));
                CHECK(r <= derived.upper * (1 + 1e-12));
                CHECK(r >= displayed.lower * (1 - 1e-12));
                CHECK(r <= displayed.upper * (1 + 1e-12));
            }
    }
}

TEST_CASE("decomposition worked instance") {
    const auto d = gms_decomposition(ones(8), 0.25, 0.0);
    CHECK(d.N == 5);
    CHECK(d.sigma == 1.0);
    const double b_expect[] = {0.2, 0.4, 0.6, 0.8, 1, 1, 1, 1};
    const double d_expect[] = {0.8, 0.6, 0.4, 0.2, 0};
    for (std::size_t n = 1; n <= 8; ++n) CHECK(std::abs(d.b.at(n) - b_expect[n - 1]) < 1e-15);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(std::abs(d.d.at(n) - d_expect[n - 1]) < 1e-15);
    for (std::size_t n = 6; n <= 8; ++n) CHECK(d.d.at(n) == Complex(0.0));
    const double tail = 1.0 / 6 + 1.0 / 7 + 1.0 / 8;
    CHECK(d.cost == Approx(1.0 + tail + 0.5).epsilon(1e-14));
    CHECK(d.k_value == Approx(1.0 + 0.2 + tail).epsilon(1e-14));
    // The printed six-decimal values.
    CHECK(std::abs(d.cost - 1.934524) < 5e-7);
    CHECK(std::abs(d.k_value - 1.634524) < 5e-7);
    CHECK(d.ratio == Approx((1.5 + tail) / (1.2 + tail)).epsilon(1e-14));
    CHECK(d.ratio <= 4.5);
}

TEST_CASE("decomposition edge cases") {
    const auto c = ComplexSeq({3.0, 1.0, 0.5});
    const auto big = gms_decomposition(c, 2.0, 0.0);
    CHECK(big.N == 0);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(big.b.at(n) == c.at(n));
    for (std::size_t n = 1; n <= 3; ++n) CHECK(big.d.at(n) == Complex(0.0));
    CHECK(big.cost == Approx(k_functional(c, 2.0)).epsilon(1e-15));
    CHECK(big.ratio == Approx(1.0));

    const auto zero = gms_decomposition(ComplexSeq(), 0.1, 0.0);
    CHECK(zero.cost == 0.0);
    CHECK(zero.k_value == 0.0);
    CHECK(zero.ratio == 1.0);

    const auto zeros = gms_decomposition(ComplexSeq({0.0, 0.0, 0.0, 2.0}), 0.5, 0.0);
    CHECK(zeros.sigma == 0.0);
    CHECK(std::isfinite(zeros.ratio));
}

TEST_CASE("decomposition on random sector sequences") {
    Rng rng(149);
    for (int i = 0; i < 60; ++i) {
        const double alpha = rng.uniform(0, 6), phi = rng.uniform(0, kPi / 3);
        const auto c = random_gms_sector(rng, static_cast<std::size_t>(rng.integer(4, 300)), alpha, phi);
        const double B = std::max(1.0, gms_constant(c).constant);
        const Sector s(alpha, phi, 1e-9);
        for (int j = 0; j < 50; ++j) {
            const double t = std::pow(10.0, -3.0 + j * 4.0 / 49);
            const auto d = gms_decomposition(c, t, alpha);
            CHECK(d.ratio >= 1 - 1e-12);
            CHECK(d.ratio <= 4.5);
            for (std::size_t n = 1; n <= c.size(); ++n) {
                CHECK(std::abs(d.b.at(n) + d.d.at(n) - c.at(n)) <= 1e-14 * (1 + c.modulus(n)));
                CHECK(s.contains(d.b.at(n)));
            }
            CHECK(gms_constant(d.b).constant <= 63 * std::pow(B, 4));
        }
    }
}
