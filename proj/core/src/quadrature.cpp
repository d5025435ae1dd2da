#include "lgm/quadrature.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgm {

namespace {

constexpr int kGaussOrder = 16;

struct GaussRule {
    std::array<double, kGaussOrder> nodes{};
    std::array<double, kGaussOrder> weights{};
};

// Legendre nodes by Newton iteration from the Chebyshev-like initial guess.
GaussRule build_gauss_rule() {
    GaussRule rule;
    const int n = kGaussOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussRule& gauss_rule() {
    static const GaussRule rule = build_gauss_rule();
    return rule;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
    const auto& rule = gauss_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kGaussOrder; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

struct GaussState {
    const std::function<double(double)>& f;
    double abs_floor;
    double rel_tol;
    double total_length;
    int max_depth;
    bool converged = true;
    double error = 0.0;
};

double gauss_recurse(GaussState& s, double a, double b, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss_panel(s.f, a, mid);
    const double right = gauss_panel(s.f, mid, b);
    const double halves = left + right;
    const double diff = std::abs(halves - whole);
    const double target =
        std::max(s.rel_tol * std::abs(halves), s.abs_floor * (b - a) / s.total_length);
    if (diff <= target || !std::isfinite(halves)) {
        s.error += diff;
        return halves;
    }
    if (depth >= s.max_depth) {
        s.converged = false;
        s.error += diff;
        return halves;
    }
    return gauss_recurse(s, a, mid, left, depth + 1) + gauss_recurse(s, mid, b, right, depth + 1);
}

// Gauss-Kronrod 7/15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    int depth;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk_panel(const std::function<double(double)>& f, double a, double b, int depth) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    return {a, b, kron * h, std::abs((kron - gauss) * h), depth};
}

}  // namespace

int max_bisection_depth() {
    if (const char* env = std::getenv("LORENTZ_GM_MAX_DEPTH")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 200) return static_cast<int>(v);
    }
    return 40;
}

QuadValue integrate_gauss(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth) {
    if (!(b > a)) return {0.0, 0.0, true};
    const double whole = gauss_panel(f, a, b);
    GaussState s{f, rel_tol * std::abs(whole) * 1e-3, rel_tol, b - a, max_depth};
    const double value = gauss_recurse(s, a, b, whole, 0);
    return {value, s.error, s.converged};
}

QuadValue integrate_gk_global(const std::function<double(double)>& f,
                              std::span<const double> initial_breaks, double rel_tol,
                              int max_depth) {
    if (initial_breaks.size() < 2) throw std::invalid_argument("integrate_gk_global: need >= 2 breaks");
    std::priority_queue<Panel> queue;
    std::vector<Panel> frozen;
    double total = 0.0, err = 0.0;
    for (std::size_t i = 0; i + 1 < initial_breaks.size(); ++i) {
        Panel p = gk_panel(f, initial_breaks[i], initial_breaks[i + 1], 0);
        total += p.value;
        err += p.error;
        queue.push(p);
    }
    constexpr std::size_t kMaxPanels = 4'000'000;
    bool converged = true;
    while (err > rel_tol * std::abs(total) && !queue.empty()) {
        Panel worst = queue.top();
        queue.pop();
        if (worst.depth >= max_depth || queue.size() + frozen.size() > kMaxPanels) {
            frozen.push_back(worst);
            converged = false;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel l = gk_panel(f, worst.a, mid, worst.depth + 1);
        Panel r = gk_panel(f, mid, worst.b, worst.depth + 1);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        queue.push(l);
        queue.push(r);
    }
    // Re-sum to shed accumulated cancellation in the running totals.
    double value = 0.0, error = 0.0;
    for (const auto& p : frozen) { value += p.value; error += p.error; }
    while (!queue.empty()) { value += queue.top().value; error += queue.top().error; queue.pop(); }
    if (error > rel_tol * std::abs(value)) converged = false;
    else converged = true;
    return {value, error, converged};
}

}  // namespace lgm
