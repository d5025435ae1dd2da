#include "lgm/gm.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lgm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Running supremum of num/den with 0/0 skipped and x/0 = inf.
class SupTracker {
public:
    explicit SupTracker(GMClass tag) { report_.class_tag = tag; report_.witness_aux = kNaN; }

    void offer(double num, double den, double witness, double aux = kNaN, bool limit = false) {
        if (den == 0.0 && num == 0.0) return;
        const double r = den == 0.0 ? kInf : num / den;
        if (!seen_ || r > report_.constant) {
            seen_ = true;
            report_.constant = r;
            report_.witness = witness;
            report_.witness_aux = aux;
            report_.limit = limit;
        }
    }

    const GMReport& report() const noexcept { return report_; }

private:
    GMReport report_;
    bool seen_ = false;
};

}  // namespace

std::string_view to_string(GMClass c) noexcept {
    switch (c) {
        case GMClass::GMS: return "GMS";
        case GMClass::GMS1: return "GMS1";
        case GMClass::GMS2: return "GMS2";
        case GMClass::GM: return "GM";
        case GMClass::GM1: return "GM1";
        case GMClass::GM2: return "GM2";
    }
    return "?";
}

bool GMReport::member() const noexcept { return constant < kInf; }

GMReport gms_constant(const ComplexSeq& a) {
    const std::size_t N = a.size();
    // prefix[k] = sum_{i<=k} |a_i - a_{i+1}|, the tail past N contributing zero.
    std::vector<double> prefix(N + 1, 0.0);
    for (std::size_t k = 1; k <= N; ++k)
        prefix[k] = prefix[k - 1] + std::abs(a.at(k) - a.at(k + 1));
    SupTracker t(GMClass::GMS);
    for (std::size_t n = 1; n <= N; ++n) {
        const std::size_t hi = std::min(2 * n - 1, N);
        t.offer(prefix[hi] - prefix[n - 1], a.modulus(n), static_cast<double>(n));
    }
    return t.report();
}

GMReport gms1_constant(const ComplexSeq& a) {
    const std::size_t N = a.size();
    SupTracker t(GMClass::GMS1);
    // Sliding maximum of |a_k| over the window n <= k <= min(2n, N).
    std::deque<std::size_t> window;
    std::size_t next = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        for (; next <= std::min(2 * n, N); ++next) {
            while (!window.empty() && a.modulus(window.back()) <= a.modulus(next)) window.pop_back();
            window.push_back(next);
        }
        while (window.front() < n) window.pop_front();
        const std::size_t k = window.front();
        t.offer(a.modulus(k), a.modulus(n), static_cast<double>(n), static_cast<double>(k));
    }
    return t.report();
}

GMReport gms2_constant(const ComplexSeq& a) {
    const std::size_t N = a.size();
    SupTracker t(GMClass::GMS2);
    for (std::size_t n = 1; n <= N; ++n) {
        double num = 0.0;
        double den = a.modulus(n);
        for (std::size_t M = n + 1; M <= N + 1; ++M) {
            num += std::abs(a.at(M - 1) - a.at(M));
            den += a.modulus(M) / static_cast<double>(M);
            t.offer(num, den, static_cast<double>(n), static_cast<double>(M));
        }
    }
    return t.report();
}

namespace {

// Flattened view of a headed step function: jump locations with their
// sizes, in increasing order.
struct Layout {
    const HeadedStepFunction& f;
    bool head = false;
    double x0 = 0.0;  // head end, 0 without head
    double c = 0.0, g = 0.0;
    std::vector<double> jump_at;
    std::vector<double> jump_cum;  // jump_cum[i] = sum of jump sizes before i

    explicit Layout(const HeadedStepFunction& fn) : f(fn) {
        if (f.head()) {
            head = true;
            x0 = f.head()->end;
            c = f.head()->coeff;
            g = f.head()->exponent;
        }
        std::vector<double> sizes;
        const std::size_t M = f.pieces();
        if (head) {
            jump_at.push_back(x0);
            sizes.push_back(std::abs((M ? f.values()[0] : Complex{}) - head_value(x0)));
        }
        for (std::size_t j = 0; j < M; ++j) {
            jump_at.push_back(f.right(j));
            const Complex next = j + 1 < M ? f.values()[j + 1] : Complex{};
            sizes.push_back(std::abs(next - f.values()[j]));
        }
        jump_cum.assign(sizes.size() + 1, 0.0);
        for (std::size_t i = 0; i < sizes.size(); ++i) jump_cum[i + 1] = jump_cum[i] + sizes[i];
    }

    double head_value(double x) const { return c * std::pow(x, g); }

    // Index of the first jump location >= x.
    std::size_t jump_index(double x) const {
        return static_cast<std::size_t>(std::lower_bound(jump_at.begin(), jump_at.end(), x) -
                                        jump_at.begin());
    }

    // Sum of jumps at p with lo <= p < hi.
    double jumps_in(double lo, double hi) const { return jump_cum[jump_index(hi)] - jump_cum[jump_index(lo)]; }

    // Index of the step piece containing xr (M when past the support).
    std::size_t piece_of(double xr) const {
        auto bp = f.breakpoints();
        return static_cast<std::size_t>(std::lower_bound(bp.begin(), bp.end(), xr) - bp.begin());
    }

    double step_modulus(std::size_t j) const {
        return j < f.pieces() ? std::abs(f.values()[j]) : 0.0;
    }

    // |f| at x, with the piece chosen by the representative point xr.
    double modulus(double x, double xr) const {
        if (head && xr <= x0) return head_value(x);
        return step_modulus(piece_of(xr));
    }

    // Upper end of the head part of [x, 2x] under the configuration of xr.
    double head_top(double x, double xr) const { return 2 * xr <= x0 ? 2 * x : x0; }

    std::vector<double> critical_points() const {
        std::vector<double> pts;
        for (double p : jump_at) {
            pts.push_back(p);
            pts.push_back(p / 2);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    }
};

// Between consecutive critical points the ratio is monotone, so the
// supremum is among the values at the critical points, the one-sided
// limits at the ends of each open subinterval, and an interior sample.
template <class Eval>
void scan_critical(const Layout& L, SupTracker& t, Eval eval) {
    const auto pts = L.critical_points();
    for (double x : pts) {
        auto [num, den] = eval(x, x);
        t.offer(num, den, x);
    }
    for (std::size_t i = 0; i <= pts.size(); ++i) {
        const double u = i == 0 ? 0.0 : pts[i - 1];
        const bool bounded = i < pts.size();
        const double w = bounded ? pts[i] : kInf;
        const double mid = bounded ? (u == 0.0 ? w / 2 : 0.5 * (u + w)) : 2 * u;
        if (mid == u || mid == w) continue;
        {
            auto [num, den] = eval(mid, mid);
            t.offer(num, den, mid);
        }
        if (u > 0.0) {
            auto [num, den] = eval(u, mid);
            t.offer(num, den, u, kNaN, true);
        }
        if (bounded) {
            auto [num, den] = eval(w, mid);
            t.offer(num, den, w, kNaN, true);
        }
    }
}

GMReport gm_ratio(const Layout& L) {
    SupTracker t(GMClass::GM);
    scan_critical(L, t, [&](double x, double xr) {
        double var = L.jumps_in(xr, 2 * xr);
        if (L.head && xr < L.x0) var += L.head_value(L.head_top(x, xr)) - L.head_value(x);
        return std::pair{var, L.modulus(x, xr)};
    });
    return t.report();
}

GMReport gm1_ratio(const Layout& L) {
    SupTracker t(GMClass::GM1);
    const std::size_t M = L.f.pieces();
    scan_critical(L, t, [&](double x, double xr) {
        double top = 0.0;
        if (L.head && xr <= L.x0) top = L.head_value(L.head_top(x, xr));
        if (M > 0 && L.x0 < 2 * xr) {
            const std::size_t lo = L.piece_of(xr);
            const std::size_t hi = std::min(L.piece_of(2 * xr), M - 1);
            for (std::size_t j = lo; j <= hi; ++j) top = std::max(top, L.step_modulus(j));
        }
        return std::pair{top, L.modulus(x, xr)};
    });
    return t.report();
}

// For fixed x the ratio only grows by jumps and otherwise decays in M, so
// M -> p+ over jump locations p >= x suffices. For fixed M the ratio grows
// with x on each step piece and is a Moebius function of x^gamma on the
// head, so x ranges over jump locations plus the limit x -> 0+.
GMReport gm2_ratio(const Layout& L) {
    SupTracker t(GMClass::GM2);
    const auto& P = L.jump_at;
    const std::size_t K = P.size();
    // G[i] = int_{P_0}^{P_i} |f(t)| dt/t.
    std::vector<double> G(K, 0.0);
    for (std::size_t i = 1; i < K; ++i) {
        const std::size_t j = L.head ? i - 1 : i;
        G[i] = G[i - 1] + L.step_modulus(j) * std::log(P[i] / P[i - 1]);
    }
    auto value_at = [&](std::size_t i) {
        if (L.head && i == 0) return L.head_value(L.x0);
        return L.step_modulus(L.head ? i - 1 : i);
    };
    for (std::size_t a = 0; a < K; ++a) {
        for (std::size_t b = a; b < K; ++b) {
            const double num = L.jump_cum[b + 1] - L.jump_cum[a];
            t.offer(num, value_at(a) + G[b] - G[a], P[a], P[b]);
        }
    }
    if (L.head) {
        const double Y = L.head_value(L.x0);
        for (std::size_t b = 0; b < K; ++b)
            t.offer(Y + L.jump_cum[b + 1], Y / L.g + G[b], 0.0, P[b], true);
    }
    return t.report();
}

}  // namespace

GMReport gm_constant_step(const HeadedStepFunction& f, GMClass variant) {
    const Layout L(f);
    switch (variant) {
        case GMClass::GM: return gm_ratio(L);
        case GMClass::GM1: return gm1_ratio(L);
        case GMClass::GM2: return gm2_ratio(L);
        default: throw std::invalid_argument("gm_constant_step: variant must be GM, GM1 or GM2");
    }
}

bool quasi_monotone_check(const ComplexSeq& a, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("quasi_monotone_check: beta must be > 0");
    double prev = kInf;
    for (std::size_t n = 1; n <= a.size(); ++n) {
        const Complex z = a.at(n);
        if (z.imag() != 0.0 || z.real() < 0.0)
            throw std::invalid_argument("quasi_monotone_check: entries must be real and nonnegative");
        const double scaled = z.real() * std::pow(static_cast<double>(n), -beta);
        if (scaled > prev * (1.0 + 1e-12)) return false;
        prev = scaled;
    }
    return true;
}

SpliceResult splice(const ComplexSeq& a, const ComplexSeq& c, std::size_t N) {
    if (N == 0) throw std::invalid_argument("splice: N must be >= 1");
    const double an = a.modulus(N), cn = c.modulus(N);
    if (an == 0.0 && cn != 0.0) throw std::invalid_argument("splice: a_N = 0 while c_N != 0");
    SpliceResult r;
    r.gamma = an == 0.0 ? 0.0 : cn / an;
    const std::size_t len = std::max(std::min(N, a.size()), c.size() > N ? c.size() : std::size_t{0});
    std::vector<Complex> b(len);
    for (std::size_t n = 1; n <= len; ++n) b[n - 1] = n <= N ? a.at(n) : c.at(n);
    r.b = ComplexSeq(std::move(b));
    r.B = std::max({1.0, gms_constant(a).constant, gms_constant(c).constant});
    r.predicted = 3 * r.B + 6 * r.B * r.B * r.gamma;
    return r;
}

Complex average_seq(const ComplexSeq& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("average_seq: n must be >= 1");
    Complex s{};
    for (std::size_t k = 1; k <= std::min(n, a.size()); ++k) s += a.at(k);
    return s / static_cast<double>(n);
}

namespace {

// int_0^x f.
Complex primitive(const HeadedStepFunction& f, double x) {
    Complex F{};
    if (f.head()) {
        const auto& h = *f.head();
        F += h.coeff * std::pow(std::min(x, h.end), h.exponent + 1) / (h.exponent + 1);
    }
    for (std::size_t j = 0; j < f.pieces() && f.left(j) < x; ++j)
        F += f.values()[j] * (std::min(x, f.right(j)) - f.left(j));
    return F;
}

}  // namespace

Complex average_function(const HeadedStepFunction& f, double x) {
    if (!(x > 0.0)) throw std::domain_error("average_function: x must be > 0");
    return primitive(f, x) / x;
}

double variation_of_average(const HeadedStepFunction& f, double a, double b) {
    if (!(a > 0.0) || !(b >= a)) throw std::domain_error("variation_of_average: need 0 < a <= b");
    std::vector<double> cuts{a};
    if (f.head() && f.head()->end > a && f.head()->end < b) cuts.push_back(f.head()->end);
    for (double x : f.breakpoints())
        if (x > a && x < b) cuts.push_back(x);
    cuts.push_back(b);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double s = cuts[i], t = cuts[i + 1];
        const double mid = 0.5 * (s + t);
        if (f.head() && mid <= f.head()->end) {
            const auto& h = *f.head();
            total += h.coeff * (std::pow(t, h.exponent) - std::pow(s, h.exponent)) / (h.exponent + 1);
            continue;
        }
        // sigma(x) = v + C/x on this piece.
        const Complex v = f(mid);
        const Complex C = primitive(f, s) - v * s;
        total += std::abs(C) * (1.0 / s - 1.0 / t);
    }
    return total;
}

double average_gm_constant(double B, double phi) {
    constexpr double K = 1.0;
    return (2 * K + 1) * (1 + 2 * (K + 1) * B * B) / std::cos(phi);
}

TwoSidedSeq bell_majorant(const TwoSidedSeq& c) {
    const int N = c.half_width();
    if (N < 0) return c;
    std::vector<double> m(static_cast<std::size_t>(N) + 1);
    double run = 0.0;
    for (int n = N; n >= 0; --n) {
        run = std::max({run, std::abs(c.at(n)), std::abs(c.at(-n))});
        m[static_cast<std::size_t>(n)] = run;
    }
    std::vector<Complex> out(2 * static_cast<std::size_t>(N) + 1);
    for (int n = -N; n <= N; ++n)
        out[static_cast<std::size_t>(n + N)] = m[static_cast<std::size_t>(std::abs(n))];
    return TwoSidedSeq(N, std::move(out));
}

}  // namespace lgm
