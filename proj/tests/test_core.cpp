#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "lgm/io.hpp"
#include "lgm/quadrature.hpp"
#include "lgm/random.hpp"
#include "lgm/report.hpp"
#include "lgm/types.hpp"

using namespace lgm;
using doctest::Approx;

TEST_CASE("sector membership") {
    CHECK(Sector(0.3, 0.1).contains(0.0));
    CHECK(sector_contains({1.0, 1.0}, Sector(0.0, kPi / 4, 0.0)));
    CHECK_FALSE(sector_contains(-1.0, Sector(0.0, kPi / 4, 0.0)));
    // Wrap-around across the branch cut of arg.
    CHECK(Sector(kPi, 0.2, 0.0).contains(std::polar(1.0, -kPi + 0.1)));
    CHECK(Sector(-kPi / 2, 0.0).contains({0.0, -3.0}));
    CHECK_THROWS_AS(Sector(0.0, kPi / 2), std::invalid_argument);
    CHECK_THROWS_AS(Sector(0.0, 0.1, -1.0), std::invalid_argument);
}

TEST_CASE("sector sums obey the reverse triangle inequality") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const double alpha = rng.uniform(0.0, 2 * kPi), phi = rng.uniform(0.0, 1.5);
        const Sector s(alpha, phi, 0.0);
        Complex sum = 0.0;
        double moduli = 0.0;
        const int m = static_cast<int>(rng.integer(1, 20));
        for (int k = 0; k < m; ++k) {
            const Complex z = std::polar(rng.uniform(0.0, 3.0), alpha + rng.uniform(-phi, phi));
            REQUIRE(s.contains(z));
            sum += z;
            moduli += std::abs(z);
        }
        CHECK(moduli <= std::abs(sum) / std::cos(phi) * (1 + 1e-12));
        CHECK(Sector(alpha, phi).contains(sum));
    }
}

TEST_CASE("sequence values and implicit zero tail") {
    const ComplexSeq a({1.0, {0.0, 2.0}});
    CHECK(a.at(1) == Complex(1.0));
    CHECK(a.at(2) == Complex(0.0, 2.0));
    CHECK(a.at(3) == Complex(0.0));
    CHECK(a.modulus(2) == 2.0);
    CHECK_THROWS_AS(a.at(0), std::out_of_range);
    CHECK_THROWS_AS(ComplexSeq({NAN}), std::invalid_argument);
    const auto b = a.scaled({0.0, 1.0});
    CHECK(b.at(1) == Complex(0.0, 1.0));
}

TEST_CASE("step function evaluation is left-open right-closed") {
    const StepFunction f({1.0, 2.0}, {1.0, 2.0});
    CHECK(f(0.5) == Complex(1.0));
    CHECK(f(1.0) == Complex(1.0));
    CHECK(f(1.0000001) == Complex(2.0));
    CHECK(f(2.0) == Complex(2.0));
    CHECK(f(2.5) == Complex(0.0));
    CHECK_THROWS_AS(f(0.0), std::domain_error);
    CHECK_THROWS_AS(StepFunction({2.0, 1.0}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(StepFunction({0.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(StepFunction({1.0}, {}), std::invalid_argument);
}

TEST_CASE("headed function evaluation") {
    const HeadedStepFunction f(PowerHead{2.0, 1.0, 0.5}, {1.0}, {3.0});
    CHECK(f(0.25) == Complex(0.5));
    CHECK(f(0.5) == Complex(1.0));
    CHECK(f(0.75) == Complex(3.0));
    CHECK(f(2.0) == Complex(0.0));
    CHECK(f.start() == 0.5);
    CHECK(f.left(0) == 0.5);
    CHECK(f.support_end() == 1.0);
    CHECK_THROWS_AS(f.as_step(), std::logic_error);
    CHECK_THROWS_AS(HeadedStepFunction(PowerHead{1.0, 1.0, 1.0}, {0.5}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(HeadedStepFunction(PowerHead{1.0, 0.0, 1.0}, {}, {}), std::invalid_argument);
    const HeadedStepFunction head_only(PowerHead{1.0, 2.0, 3.0}, {}, {});
    CHECK(head_only.support_end() == 3.0);
}

TEST_CASE("sequence to step function") {
    const auto f = sequence_to_step(ComplexSeq({5.0}));
    CHECK(f.pieces() == 1);
    CHECK(f(1.0) == Complex(5.0));
    const auto g = sequence_to_step(ComplexSeq({1.0, 2.0}));
    CHECK(g(0.5) == Complex(1.0));
    CHECK(g(1.5) == Complex(2.0));
    CHECK(sequence_to_step(ComplexSeq()).empty());

    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_complex_seq(rng, static_cast<std::size_t>(rng.integer(1, 100)));
        const auto h = sequence_to_step(a);
        for (std::size_t n = 1; n <= a.size(); ++n) CHECK(h(static_cast<double>(n)) == a.at(n));
    }
}

TEST_CASE("weight w(p,q)") {
    CHECK(weight_pq(PQ{2.0, 1.0}, 4.0) == Approx(0.5));
    CHECK(weight_pq(PQ{3.0, 3.0}, 17.0) == Approx(1.0));
    CHECK(weight_pq(PQ{1.0, kInfinity}, 9.0) == Approx(9.0));
    CHECK(weight_pq(PQ{kInfinity, kInfinity}, 9.0) == 1.0);
}

TEST_CASE("exponents") {
    CHECK(kInfinity.is_infinite());
    CHECK(kInfinity.reciprocal() == 0.0);
    CHECK(Exponent(4.0).reciprocal() == 0.25);
    CHECK_THROWS_AS(Exponent(0.0), std::invalid_argument);
    CHECK_THROWS_AS(kInfinity.value(), std::logic_error);
    CHECK(PQ::conjugate(3.0) == Approx(1.5));
    CHECK(PQ::conjugate(1.5) == Approx(3.0));
    CHECK_THROWS_AS(PQ::conjugate(1.0), std::invalid_argument);
    CHECK((PQ{2.0, 1.0}).lorentz_admissible());
    CHECK((PQ{kInfinity, kInfinity}).lorentz_admissible());
    CHECK_FALSE((PQ{kInfinity, 2.0}).lorentz_admissible());
}

TEST_CASE("bound_check conventions") {
    CHECK(bound_check("a", 1.0, 1.0, 1.0).pass);
    CHECK_FALSE(bound_check("a", 1.1, 1.0, 1.0).pass);
    CHECK(bound_check("a", 5.0, INFINITY, 1.0).pass);
    CHECK(bound_check("a", 0.0, 0.0, 1.0).pass);
    CHECK_FALSE(bound_check("a", 1.0, 0.0, 1.0).pass);
    CHECK_FALSE(bound_check("a", NAN, 1.0, 1.0).pass);
    const auto r = bound_check("x", 2.0, 4.0, 3.0);
    CHECK(r.ratio == 0.5);
    CHECK(to_csv_row(r) == "x,2,4,3,0.5,true");
}

TEST_CASE("gauss quadrature") {
    const auto v = integrate_gauss([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(v.converged);
    CHECK(v.value == Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    const auto s = integrate_gauss([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
    CHECK(s.value == Approx(2.0 / 3.0).epsilon(1e-11));
    const double br[] = {0.0, 1.0, 2.0};
    const auto k = integrate_gk_global([](double x) { return std::abs(std::sin(10 * x)); }, br, 1e-10);
    CHECK(k.converged);
    CHECK(k.value == Approx((13.0 - std::cos(20.0)) / 10.0).epsilon(1e-9));
}

TEST_CASE("quadrature depth cap from the environment") {
    CHECK(max_bisection_depth() > 0);
    ::setenv("LORENTZ_GM_MAX_DEPTH", "2", 1);
    CHECK(max_bisection_depth() == 2);
    const auto v = integrate_gauss([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-14);
    CHECK_FALSE(v.converged);
    ::setenv("LORENTZ_GM_MAX_DEPTH", "junk", 1);
    CHECK(max_bisection_depth() == 40);
    ::unsetenv("LORENTZ_GM_MAX_DEPTH");
}

TEST_CASE("json sequences") {
    const auto a = parse_sequence(R"({"re":[1,2],"im":[0,-1]})");
    CHECK(a.size() == 2);
    CHECK(a.at(2) == Complex(2.0, -1.0));
    const auto b = parse_sequence(R"({"re":[3]})");
    CHECK(b.at(1) == Complex(3.0));
    CHECK(parse_sequence(to_json(a)).at(2) == a.at(2));
    CHECK_THROWS_AS(parse_sequence("{"), InputError);
    CHECK_THROWS_AS(parse_sequence("[1,2]"), InputError);
    CHECK_THROWS_AS(parse_sequence(R"({"im":[1]})"), InputError);
    CHECK_THROWS_AS(parse_sequence(R"({"re":[1],"im":[1,2]})"), InputError);
    CHECK_THROWS_AS(parse_sequence(R"({"re":["x"]})"), InputError);
}

TEST_CASE("json step and headed functions") {
    const auto f = parse_function(R"({"breakpoints":[1,2],"re":[1,3]})");
    CHECK_FALSE(f.has_head());
    CHECK(f(1.5) == Complex(3.0));
    const auto g = parse_function(R"({"head":{"c":2,"gamma":1},"breakpoints":[0.5,1],"re":[3],"im":[0]})");
    REQUIRE(g.has_head());
    CHECK(g.head()->end == 0.5);
    CHECK(g(0.25) == Complex(0.5));
    CHECK(g(0.75) == Complex(3.0));
    const auto back = parse_function(to_json(g));
    CHECK(back(0.25) == g(0.25));
    CHECK(back(0.75) == g(0.75));
    CHECK_THROWS_AS(parse_function(R"({"breakpoints":[2,1],"re":[1,1]})"), InputError);
    CHECK_THROWS_AS(parse_function(R"({"head":{"c":1,"gamma":1},"breakpoints":[1],"re":[1]})"), InputError);
    CHECK_THROWS_AS(parse_function(R"({"head":{"c":1},"breakpoints":[1],"re":[]})"), InputError);
    CHECK_THROWS_AS(load_sequence("/nonexistent/file.json"), InputError);
}

TEST_CASE("generators are reproducible") {
    Rng a(5), b(5);
    const auto s1 = random_gms_sector(a, 50, 1.0, 0.5);
    const auto s2 = random_gms_sector(b, 50, 1.0, 0.5);
    for (std::size_t n = 1; n <= 50; ++n) CHECK(s1.at(n) == s2.at(n));
    const Sector sec(1.0, 0.5);
    for (const auto& z : s1.values()) CHECK(sec.contains(z));
}
