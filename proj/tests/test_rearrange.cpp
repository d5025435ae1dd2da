#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lgm/random.hpp"
#include "lgm/rearrange.hpp"
#include "oracles.hpp"

using namespace lgm;
using doctest::Approx;

namespace {

// Integral of the product of two step functions on their common refinement.
double integral_product(const StepFunction& f, const StepFunction& g) {
    std::vector<double> pts{0.0};
    for (double x : f.breakpoints()) pts.push_back(x);
    for (double x : g.breakpoints()) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    double s = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double mid = 0.5 * (pts[i - 1] + pts[i]);
        s += std::abs(f(mid)) * std::abs(g(mid)) * (pts[i] - pts[i - 1]);
    }
    return s;
}

StepFunction random_monotone_step(Rng& rng, std::size_t pieces, bool decreasing, double end) {
    std::vector<double> bp, v;
    for (std::size_t j = 0; j < pieces; ++j) {
        bp.push_back(end * static_cast<double>(j + 1) / static_cast<double>(pieces));
        v.push_back(rng.uniform(0.0, 2.0));
    }
    if (decreasing) std::sort(v.begin(), v.end(), std::greater<>());
    else std::sort(v.begin(), v.end());
    return StepFunction(bp, std::vector<Complex>(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("distribution examples") {
    const StepFunction f({2.0}, {5.0});
    CHECK(distribution(f, 1.0) == 2.0);
    CHECK(distribution(f, 5.0) == 0.0);
    CHECK(distribution(ComplexSeq({3.0, 1.0, 2.0}), 1.5) == 2.0);
    CHECK_THROWS_AS(distribution(f, -1.0), std::domain_error);
}

TEST_CASE("rearrangement examples") {
    const auto r = rearrange_step(StepFunction({1.0, 2.0}, {1.0, 3.0}));
    CHECK(r == DecreasingStep({1.0, 2.0}, {3.0, 1.0}));

    const auto fixed = rearrange_step(StepFunction({1.0, 3.0}, {2.0, 1.0}));
    CHECK(fixed == DecreasingStep({1.0, 3.0}, {2.0, 1.0}));

    const auto merged = rearrange_step(StepFunction({0.5, 1.5}, {-2.0, 2.0}));
    CHECK(merged == DecreasingStep({1.5}, {2.0}));

    CHECK(rearrange_seq(ComplexSeq({1.0, 3.0, 2.0})) == std::vector<double>{3.0, 2.0, 1.0});
    CHECK(rearrange_seq(ComplexSeq({Complex(0, 1), -1.0})) == std::vector<double>{1.0, 1.0});
    CHECK(rearrange_seq(ComplexSeq()).empty());
}

TEST_CASE("rearrangement is right-continuous with left limits") {
    const DecreasingStep fs({1.0, 2.0}, {3.0, 1.0});
    CHECK(left_limit(fs, 1.0) == 3.0);
    CHECK(left_limit(fs, 1.5) == 1.0);
    CHECK(left_limit(fs, 5.0) == 0.0);
    CHECK(fs(1.0) == 1.0);
    CHECK(fs(0.0) == 3.0);
    CHECK(fs(2.0) == 0.0);
    // f*(x) = inf{a : f_*(a) <= x}, checked at and between breakpoints.
    for (double x : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
        double lo = 0.0, hi = 10.0;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (distribution(fs, mid) <= x ? hi : lo) = mid;
        }
        CHECK(fs(x) == Approx(hi).epsilon(1e-12));
    }
}

TEST_CASE("equimeasurability on random dyadic step functions") {
    Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        const auto f = random_dyadic_step(rng, static_cast<std::size_t>(rng.integer(1, 25)));
        const auto fs = rearrange_step(f);
        for (int k = 0; k < 40; ++k) {
            const double a = k % 2 ? rng.uniform(0.0, 2.2) : std::abs(f.values()[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(f.pieces()) - 1))]);
            CHECK(distribution(fs, a) == oracle::distribution(f, a));
            CHECK(distribution(fs.to_step(), a) == distribution(f, a));
        }
    }
}

TEST_CASE("rearrangement is idempotent and ignores phase") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_dyadic_step(rng, static_cast<std::size_t>(rng.integer(1, 25)));
        const auto fs = rearrange_step(f);
        CHECK(rearrange_step(fs.to_step()) == fs);
        std::vector<Complex> rotated(f.values().begin(), f.values().end());
        for (auto& z : rotated) z *= Complex(0.0, -1.0);
        const auto g = rearrange_step(StepFunction({f.breakpoints().begin(), f.breakpoints().end()}, rotated));
        REQUIRE(g.pieces() == fs.pieces());
        for (std::size_t j = 0; j < g.pieces(); ++j) CHECK(g.values()[j] == Approx(fs.values()[j]).epsilon(1e-15));
    }
}

TEST_CASE("discrete rearrangement inequality") {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        const std::size_t N = static_cast<std::size_t>(rng.integer(1, 60));
        std::vector<double> a(N), c(N);
        for (auto& x : a) x = rng.uniform(0.0, 1.0);
        for (auto& x : c) x = rng.uniform(0.0, 1.0);
        std::sort(c.begin(), c.end(), std::greater<>());
        const auto as = rearrange_seq(ComplexSeq::from_real(a));
        double lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < N; ++k) {
            lhs += a[k] * c[k];
            rhs += as[k] * c[k];
        }
        CHECK(lhs <= rhs * (1 + 1e-12));
        std::reverse(c.begin(), c.end());
        lhs = rhs = 0;
        for (std::size_t k = 0; k < N; ++k) {
            lhs += a[k] * c[k];
            rhs += as[k] * c[k];
        }
        CHECK(lhs >= rhs * (1 - 1e-12));
    }
}

TEST_CASE("integral rearrangement inequality for step functions") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const auto f = random_dyadic_step(rng, static_cast<std::size_t>(rng.integer(1, 20)));
        const auto fs = rearrange_step(f).to_step();
        // g decreasing: int f g <= int f* g.
        const auto gd = random_monotone_step(rng, static_cast<std::size_t>(rng.integer(1, 10)), true,
                                             f.support_end() * rng.uniform(0.5, 1.5));
        CHECK(integral_product(f, gd) <= integral_product(fs, gd) * (1 + 1e-12) + 1e-15);
        // g increasing on a window covering the support of f.
        const auto gi = random_monotone_step(rng, static_cast<std::size_t>(rng.integer(1, 10)), false,
                                             f.support_end() * 2.0);
        CHECK(integral_product(f, gi) >= integral_product(fs, gi) * (1 - 1e-12) - 1e-15);
    }
}

TEST_CASE("dominated primitives give dominated weighted integrals") {
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        const auto f1 = random_dyadic_step(rng, static_cast<std::size_t>(rng.integer(1, 20)));
        // f2 = f1* has larger primitives from 0.
        const auto f2 = rearrange_step(f1).to_step();
        double a = 0.0;
        bool dominated = true;
        for (int k = 1; k <= 64; ++k) {
            a = f1.support_end() * k / 64.0;
            auto prim = [&](const StepFunction& f) {
                double s = 0.0;
                for (std::size_t j = 0; j < f.pieces(); ++j)
                    s += std::abs(f.values()[j]) * std::max(0.0, std::min(a, f.right(j)) - f.left(j));
                return s;
            };
            dominated = dominated && prim(f1) <= prim(f2) + 1e-12;
        }
        CHECK(dominated);
        const auto g = random_monotone_step(rng, 8, true, f1.support_end());
        CHECK(integral_product(f1, g) <= integral_product(f2, g) * (1 + 1e-12) + 1e-15);
    }
}
