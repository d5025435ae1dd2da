#pragma once

// Seeded generators for the property and acceptance suites. Every
// generator draws only from the Rng passed in, so a fixed seed reproduces
// the same inputs on a given platform.

#include <cstdint>
#include <random>

#include "lgm/types.hpp"

namespace lgm {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi);
    // Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi);
    double log_uniform(double lo, double hi);
    bool chance(double p);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
};

// Step function whose breakpoints are multiples of 1/64 below 64 and whose
// moduli are multiples of 1/8, so every length sum is exact in binary.
StepFunction random_dyadic_step(Rng& rng, std::size_t pieces);

// Sequence with every term in Sector(alpha, phi) built from a slowly
// perturbed power decay; regenerated until gms_constant <= max_B.
ComplexSeq random_gms_sector(Rng& rng, std::size_t N, double alpha, double phi, double max_B = 8.0);

// Moduli within a factor 2 of a power decay and arbitrary phases: finite
// GMS_1 constant, unbounded variation.
ComplexSeq random_gms1(Rng& rng, std::size_t N);

// A GMS sequence in a random sector (hence GMS_2).
ComplexSeq random_gms2(Rng& rng, std::size_t N);

// Arbitrary complex coefficients with moduli in [0, 1].
ComplexSeq random_complex_seq(Rng& rng, std::size_t N);

// Step function with geometric breakpoints and moduli within a factor 2
// of a power decay (finite GM_1 constant).
StepFunction random_gm1_step(Rng& rng, std::size_t pieces);

// Step function with values in Sector(alpha, phi) and bounded relative
// jumps (finite GM constant).
StepFunction random_gm_sector_step(Rng& rng, std::size_t pieces, double alpha, double phi);

// Nonnegative headed function c x^gamma on (0, x0] followed by positive
// steps, gamma drawn from [gamma_lo, gamma_hi].
HeadedStepFunction random_gm_plus(Rng& rng, std::size_t pieces, double gamma_lo, double gamma_hi);

}  // namespace lgm
