#pragma once

#include <span>
#include <string>

namespace lgm {

// One inequality instance lhs <= constant * rhs, with ratio = lhs / rhs.
// rhs is the bound's base quantity (without the constant).
struct VerificationReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 1.0;
    double ratio = 0.0;
    bool pass = false;
};

// Builds a report for lhs <= constant * rhs. An infinite rhs passes
// vacuously; 0 <= constant * 0 passes with ratio 0.
VerificationReport bound_check(std::string name, double lhs, double rhs, double constant,
                               double rel_tol = 1e-12);

std::string report_csv_header();
std::string to_csv_row(const VerificationReport& r);
std::string to_csv(std::span<const VerificationReport> rows);

}  // namespace lgm
