#pragma once

// Minimal general-monotonicity constants, splices, averages and majorants.

#include <string_view>

#include "lgm/types.hpp"

namespace lgm {

enum class GMClass { GMS, GMS1, GMS2, GM, GM1, GM2 };

std::string_view to_string(GMClass c) noexcept;

// constant is the supremum of the defining ratio, +inf when no B works.
// 0/0 ratios are skipped. witness is the index (sequences) or point
// (functions) where the supremum is reached; witness_aux is the second
// quantifier for the two-parameter classes (N' for GMS2, M for GM2), NaN
// otherwise. When `limit` is set the supremum is only approached as the
// first parameter tends to the witness from the right.
struct GMReport {
    GMClass class_tag = GMClass::GMS;
    double constant = 0.0;
    double witness = 0.0;
    double witness_aux = 0.0;
    bool limit = false;

    bool member() const noexcept;
};

GMReport gms_constant(const ComplexSeq& a);
GMReport gms1_constant(const ComplexSeq& a);
// O(N^2) scan over 1 <= n < N' <= N + 1.
GMReport gms2_constant(const ComplexSeq& a);

// variant must be GM, GM1 or GM2. A jump at p counts toward V_f([a, b])
// iff a <= p < b.
GMReport gm_constant_step(const HeadedStepFunction& f, GMClass variant);

// a_n n^{-beta} non-increasing on 1..N. Throws on negative or complex input.
bool quasi_monotone_check(const ComplexSeq& a, double beta);

struct SpliceResult {
    ComplexSeq b;
    double gamma = 0.0;      // |c_N| / |a_N|
    double B = 1.0;          // max(1, gms(a), gms(c))
    double predicted = 0.0;  // 3B + 6B^2 gamma
};

// b_n = a_n for n <= N, c_n for n > N. Throws if a_N = 0 while c_N != 0.
SpliceResult splice(const ComplexSeq& a, const ComplexSeq& c, std::size_t N);

// (1/n) sum_{k<=n} a_k.
Complex average_seq(const ComplexSeq& a, std::size_t n);

// sigma_x = (1/x) int_0^x f.
Complex average_function(const HeadedStepFunction& f, double x);

// Variation of x -> sigma_x over [a, b]. sigma is continuous and on each
// piece traces either a ray segment v + C/x or a power curve, so the
// length is summed exactly.
double variation_of_average(const HeadedStepFunction& f, double a, double b);

// B' = (2K + 1)(1 + 2(K + 1)B^2)/cos(phi) with K = 1.
double average_gm_constant(double B, double phi);

// m_n = max_{|k| >= |n|} |c_k|.
TwoSidedSeq bell_majorant(const TwoSidedSeq& c);

}  // namespace lgm
