#pragma once

// K-functional of the couple (l^1_{1/k}, l^1), the K-method norm, the
// Gilbert functional and the cone-constrained decomposition.

#include "lgm/quadrature.hpp"
#include "lgm/types.hpp"

namespace lgm {

// K(t, c) = sum_n |c_n| min(1/n, t), accumulated as
// t * sum_{n t <= 1} |c_n| + sum_{n t > 1} |c_n| / n.
double k_functional(const ComplexSeq& c, double t);

// The two-sum display t sum_{n <= 1/t} |c_n| + sum_{n > 1/t} |c_n|/n,
// evaluated as two independent sums split at n0 = max{n : n t <= 1}.
double k_functional_display(const ComplexSeq& c, double t);

// Coordinatewise minimisation of |b_n|/n + t|c_n - b_n| over b_n = s c_n,
// s on a uniform grid of [0, 1] with grid_resolution + 1 points.
double k_functional_oracle(const ComplexSeq& c, double t, int grid_resolution = 8);

// ||t^{-theta} K(t, c)||_{L^q(dt/t)}, 0 < theta < 1. Closed forms on
// (0, 1/N] and [1, inf); Gauss quadrature on the mixed pieces.
QuadValue interpolation_norm(const ComplexSeq& c, double theta, Exponent q,
                             double rel_tol = 1e-10);

// (int_0^inf (t^{theta-1} sum_{t <= k < 2t} |c_k|)^q dt/t)^{1/q}, in
// closed form; the sup of t^{theta-1} S(t) for q = inf.
double gilbert_functional(const ComplexSeq& c, double theta, Exponent q);

// lower * ||c||_{l^q_{w(1/theta,q)}} <= gilbert <= upper * ||c||, for
// c in GMS_1(B).
struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
};

// Constants obtained by carrying the estimates through exactly:
// upper = 2B max{1, 1/(theta q), 2^{1-theta q}}^{1/q},
// lower = (1/(2B)) min{1/2, 2^{-theta q}}^{1/q}. Finite q only.
Bracket gilbert_bracket(double theta, double q, double B);

// The constants as displayed in the source argument:
// upper = B max{1, 1/(theta q), 2^{1-theta q}},
// lower = min{1/2, 2^{1-theta q}} / B.
Bracket gilbert_bracket_displayed(double theta, double q, double B);

struct Decomposition {
    ComplexSeq b;
    ComplexSeq d;
    double t = 0.0;
    std::size_t N = 0;  // 0 when t > 1 (no construction)
    double sigma = 0.0;
    double cost = 0.0;     // ||b||_{l^1_{1/k}} + t ||d||_{l^1}
    double k_value = 0.0;  // K(t, c)
    double ratio = 1.0;    // cost / k_value, 1 when both vanish
};

// For t <= 1: N = 1 + max{n : n t <= 1}, sigma = mean of |c_1..c_N|,
// a_n = (n/N) sigma e^{i alpha}; b = a on [1, N] and c beyond,
// d = c - a on [1, N]. For t > 1: b = c, d = 0.
Decomposition gms_decomposition(const ComplexSeq& c, double t, double alpha);

}  // namespace lgm
