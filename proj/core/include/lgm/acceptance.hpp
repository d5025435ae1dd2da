#pragma once

// The acceptance suite: eleven numbered criteria, each a seeded batch of
// checks with a runtime budget.

#include <cstdint>
#include <string>
#include <vector>

namespace lgm {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool checks_pass = false;  // every numeric check held
    std::string detail;        // counts and worst margins, deterministic
    double seconds = 0.0;
    double time_limit = 0.0;

    bool within_time() const noexcept { return seconds < time_limit; }
    bool pass() const noexcept { return checks_pass && within_time(); }
};

inline constexpr int kCriterionCount = 11;

// Runs criterion `id` (1..11) with generators seeded from `seed`.
CriterionResult run_criterion(int id, std::uint64_t seed);

// Runs the listed criteria in order; an empty list means all of them.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& ids = {});

}  // namespace lgm
