#include "lgm/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lgm {

namespace {

void require_t(double t, const char* who) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument(std::string(who) + ": t must be > 0");
}

void require_theta(double theta, const char* who) {
    if (!(theta > 0.0) || !(theta < 1.0))
        throw std::invalid_argument(std::string(who) + ": theta must lie in (0, 1)");
}

// (w^e - u^e) / e for 0 < u < w, e != 0.
double power_increment(double u, double w, double e) {
    return std::pow(u, e) * std::expm1(e * std::log(w / u)) / e;
}

// Largest n with n t <= 1 (0 when t > 1).
std::size_t head_count(double t) {
    if (t > 1.0) return 0;
    auto n = static_cast<std::size_t>(std::floor(1.0 / t));
    while (static_cast<double>(n + 1) * t <= 1.0) ++n;
    while (n > 0 && static_cast<double>(n) * t > 1.0) --n;
    return n;
}

}  // namespace

double k_functional(const ComplexSeq& c, double t) {
    require_t(t, "k_functional");
    double head = 0.0, tail = 0.0;
    for (std::size_t n = 1; n <= c.size(); ++n) {
        const double m = c.modulus(n);
        if (static_cast<double>(n) * t <= 1.0) head += m;
        else tail += m / static_cast<double>(n);
    }
    return t * head + tail;
}

double k_functional_display(const ComplexSeq& c, double t) {
    require_t(t, "k_functional_display");
    const std::size_t n0 = std::min(head_count(t), c.size());
    double head = 0.0;
    for (std::size_t n = 1; n <= n0; ++n) head += c.modulus(n);
    double tail = 0.0;
    for (std::size_t n = n0 + 1; n <= c.size(); ++n) tail += c.modulus(n) / static_cast<double>(n);
    return t * head + tail;
}

double k_functional_oracle(const ComplexSeq& c, double t, int grid_resolution) {
    require_t(t, "k_functional_oracle");
    if (grid_resolution < 1) throw std::invalid_argument("k_functional_oracle: grid_resolution must be >= 1");
    double total = 0.0;
    for (std::size_t n = 1; n <= c.size(); ++n) {
        const Complex z = c.at(n);
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= grid_resolution; ++i) {
            const double s = static_cast<double>(i) / grid_resolution;
            const Complex b = s * z;
            best = std::min(best, std::abs(b) / static_cast<double>(n) + t * std::abs(z - b));
        }
        total += best;
    }
    return total;
}

QuadValue interpolation_norm(const ComplexSeq& c, double theta, Exponent q_ext, double rel_tol) {
    require_theta(theta, "interpolation_norm");
    const std::size_t N = c.size();
    // On (1/(n+1), 1/n]: K(t) = A[n] t + T[n], A[n] = sum_{k<=n} |c_k|,
    // T[n] = sum_{k>n} |c_k|/k.
    std::vector<double> A(N + 1, 0.0), T(N + 1, 0.0);
    for (std::size_t n = 1; n <= N; ++n) A[n] = A[n - 1] + c.modulus(n);
    for (std::size_t n = N; n >= 1; --n) T[n - 1] = T[n] + c.modulus(n) / static_cast<double>(n);
    if (N == 0 || (A[N] == 0.0)) return {0.0, 0.0, true};

    if (q_ext.is_infinite()) {
        auto g = [&](std::size_t n, double t) { return std::pow(t, -theta) * (A[n] * t + T[n]); };
        double sup = 0.0;
        for (std::size_t n = 1; n <= N; ++n) sup = std::max(sup, g(n, 1.0 / static_cast<double>(n)));
        for (std::size_t n = 1; n < N; ++n) {
            if (A[n] == 0.0) continue;
            const double ts = theta * T[n] / ((1 - theta) * A[n]);
            if (ts > 1.0 / static_cast<double>(n + 1) && ts < 1.0 / static_cast<double>(n))
                sup = std::max(sup, g(n, ts));
        }
        return {sup, 0.0, true};
    }

    const double q = q_ext.value();
    double total = std::pow(A[N], q) * std::pow(1.0 / static_cast<double>(N), (1 - theta) * q) /
                   ((1 - theta) * q);
    total += std::pow(T[0], q) / (theta * q);
    QuadValue out;
    for (std::size_t n = 1; n < N; ++n) {
        const double a = A[n], b = T[n];
        // u = ln t, dt/t = du.
        auto integrand = [=](double u) {
            return std::pow(a * std::exp((1 - theta) * u) + b * std::exp(-theta * u), q);
        };
        const auto piece = integrate_gauss(integrand, -std::log(static_cast<double>(n + 1)),
                                           -std::log(static_cast<double>(n)), rel_tol);
        total += piece.value;
        out.error += piece.error;
        out.converged = out.converged && piece.converged;
    }
    out.value = std::pow(total, 1.0 / q);
    out.error = out.value * out.error / (q * total);
    return out;
}

double gilbert_functional(const ComplexSeq& c, double theta, Exponent q_ext) {
    require_theta(theta, "gilbert_functional");
    const std::size_t N = c.size();
    if (N == 0) return 0.0;
    std::vector<double> prefix(N + 1, 0.0);
    for (std::size_t k = 1; k <= N; ++k) prefix[k] = prefix[k - 1] + c.modulus(k);
    // S(t) = sum over ceil(t) <= k <= ceil(2t) - 1.
    auto S = [&](double t) {
        const auto lo = static_cast<std::size_t>(std::ceil(t));
        const auto hi = std::min(static_cast<std::size_t>(std::ceil(2 * t)) - 1, N);
        return lo > hi ? 0.0 : prefix[hi] - prefix[lo - 1];
    };
    std::vector<double> pts;
    for (std::size_t k = 1; k <= N; ++k) {
        pts.push_back(static_cast<double>(k));
        pts.push_back(0.5 * static_cast<double>(k));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (q_ext.is_infinite()) {
        double sup = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double u = pts[i];
            sup = std::max(sup, std::pow(u, theta - 1) * S(u));
            if (i + 1 < pts.size()) sup = std::max(sup, std::pow(u, theta - 1) * S(0.5 * (u + pts[i + 1])));
        }
        return sup;
    }
    const double q = q_ext.value();
    const double e = (theta - 1) * q;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double u = pts[i], w = pts[i + 1];
        const double s = S(0.5 * (u + w));
        if (s == 0.0) continue;
        total += std::pow(s, q) * power_increment(u, w, e);
    }
    return std::pow(total, 1.0 / q);
}

Bracket gilbert_bracket(double theta, double q, double B) {
    require_theta(theta, "gilbert_bracket");
    B = std::max(B, 1.0);
    const double tq = theta * q;
    const double up = std::max({1.0, 1.0 / tq, std::exp2(1 - tq)});
    const double lo = std::min(0.5, std::exp2(-tq));
    return {std::pow(lo, 1.0 / q) / (2 * B), 2 * B * std::pow(up, 1.0 / q)};
}

Bracket gilbert_bracket_displayed(double theta, double q, double B) {
    require_theta(theta, "gilbert_bracket_displayed");
    B = std::max(B, 1.0);
    const double tq = theta * q;
    const double up = std::max({1.0, 1.0 / tq, std::exp2(1 - tq)});
    const double lo = std::min(0.5, std::exp2(1 - tq));
    return {lo / B, B * up};
}

Decomposition gms_decomposition(const ComplexSeq& c, double t, double alpha) {
    require_t(t, "gms_decomposition");
    Decomposition dec;
    dec.t = t;
    dec.k_value = k_functional(c, t);
    if (t > 1.0) {
        dec.b = c;
        dec.d = ComplexSeq(std::vector<Complex>(c.size()));
        for (std::size_t n = 1; n <= c.size(); ++n) dec.cost += c.modulus(n) / static_cast<double>(n);
    } else {
        const std::size_t N = head_count(t) + 1;
        dec.N = N;
        double sum = 0.0;
        for (std::size_t k = 1; k <= N; ++k) sum += c.modulus(k);
        dec.sigma = sum / static_cast<double>(N);
        const Complex dir = std::polar(1.0, alpha);
        std::vector<Complex> b(std::max(N, c.size())), d(N);
        double b_norm = 0.0, d_norm = 0.0;
        for (std::size_t n = 1; n <= b.size(); ++n) {
            if (n <= N) {
                const Complex a = (static_cast<double>(n) / static_cast<double>(N)) * dec.sigma * dir;
                b[n - 1] = a;
                d[n - 1] = c.at(n) - a;
                d_norm += std::abs(d[n - 1]);
            } else {
                b[n - 1] = c.at(n);
            }
            b_norm += std::abs(b[n - 1]) / static_cast<double>(n);
        }
        dec.b = ComplexSeq(std::move(b));
        dec.d = ComplexSeq(std::move(d));
        dec.cost = b_norm + t * d_norm;
    }
    dec.ratio = dec.k_value == 0.0 ? 1.0 : dec.cost / dec.k_value;
    return dec;
}

}  // namespace lgm
