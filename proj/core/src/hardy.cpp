#include "lgm/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lgm/gm.hpp"
#include "lgm/norms.hpp"

namespace lgm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Real nonnegative step values; throws otherwise.
std::vector<double> real_values(const HeadedStepFunction& f, const char* who) {
    std::vector<double> v;
    v.reserve(f.pieces());
    for (const Complex& z : f.values()) {
        if (z.imag() != 0.0 || z.real() < 0.0)
            throw std::invalid_argument(std::string(who) + ": f must be real and nonnegative");
        v.push_back(z.real());
    }
    for (std::size_t j = 0; j < v.size(); ++j)
        if (f.left(j) == 0.0 && v[j] != 0.0)
            throw std::invalid_argument(std::string(who) +
                                        ": nonzero f near 0 needs a power head (inner integral diverges)");
    return v;
}

double head_inner(const PowerHead& h, double x) {
    return h.coeff * std::pow(std::min(x, h.end), h.exponent) / h.exponent;
}

}  // namespace

double hardy_inner(const HeadedStepFunction& f, double x) {
    if (!(x > 0.0)) throw std::domain_error("hardy_inner: x must be > 0");
    const auto v = real_values(f, "hardy_inner");
    double I = f.head() ? head_inner(*f.head(), x) : 0.0;
    for (std::size_t j = 0; j < v.size() && f.left(j) < x; ++j)
        if (v[j] != 0.0) I += v[j] * std::log(std::min(x, f.right(j)) / f.left(j));
    return I;
}

QuadValue hardy_lhs(const HeadedStepFunction& f, double alpha, Exponent q_ext, double rel_tol) {
    if (!(alpha > 0.0)) throw std::invalid_argument("hardy_lhs: alpha must be > 0");
    const auto v = real_values(f, "hardy_lhs");
    QuadValue out;

    if (q_ext.is_infinite()) {
        double sup = 0.0, I = 0.0;
        if (f.head()) {
            const auto& h = *f.head();
            if (h.exponent < alpha) return {kInf, 0.0, true};
            I = head_inner(h, h.end);
            sup = std::pow(h.end, -alpha) * I;
        }
        for (std::size_t j = 0; j < v.size(); ++j) {
            const double l = f.left(j), r = f.right(j);
            if (l == 0.0) continue;  // v[j] == 0 there, I stays 0
            auto h = [&](double u) { return std::pow(l, -alpha) * std::exp(-alpha * u) * (I + v[j] * u); };
            const double len = std::log(r / l);
            sup = std::max({sup, h(0.0), h(len)});
            if (v[j] > 0.0) {
                const double us = 1.0 / alpha - I / v[j];
                if (us > 0.0 && us < len) sup = std::max(sup, h(us));
            }
            I += v[j] * len;
        }
        out.value = sup;
        return out;
    }

    const double q = q_ext.value();
    double total = 0.0, I = 0.0;
    if (f.head()) {
        const auto& h = *f.head();
        const double e = (h.exponent - alpha) * q;
        if (e <= 0.0) return {kInf, 0.0, true};
        total += std::pow(h.coeff / h.exponent, q) * std::pow(h.end, e) / e;
        I = head_inner(h, h.end);
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double l = f.left(j), r = f.right(j);
        if (l == 0.0) continue;
        const double len = std::log(r / l);
        const double scale = std::pow(l, -alpha * q);
        const double I0 = I, vj = v[j];
        if (I0 > 0.0 || vj > 0.0) {
            auto integrand = [=](double u) { return scale * std::exp(-alpha * q * u) * std::pow(I0 + vj * u, q); };
            const auto piece = integrate_gauss(integrand, 0.0, len, rel_tol);
            total += piece.value;
            out.error += piece.error;
            out.converged = out.converged && piece.converged;
        }
        I += vj * len;
    }
    const double xm = f.support_end();
    if (I > 0.0) total += std::pow(I, q) * std::pow(xm, -alpha * q) / (alpha * q);
    out.value = std::pow(total, 1.0 / q);
    out.error = total > 0.0 ? out.value * out.error / (q * total) : 0.0;
    return out;
}

double hardy_rhs(const HeadedStepFunction& f, double alpha, Exponent q) {
    if (!(alpha > 0.0)) throw std::invalid_argument("hardy_rhs: alpha must be > 0");
    return power_weighted_norm(f, -alpha, q);
}

bool HardyReport::stable() const noexcept {
    if (vacuous) return true;
    return converged && std::isfinite(ratio) && drift < 0.01;
}

HardyReport hardy_report(const HeadedStepFunction& f, double alpha, Exponent q) {
    HardyReport r;
    r.rhs = hardy_rhs(f, alpha, q);
    if (std::isinf(r.rhs)) {
        r.vacuous = true;
        r.lhs = hardy_lhs(f, alpha, q).value;
        r.ratio = 0.0;
        return r;
    }
    const auto fine = hardy_lhs(f, alpha, q, 1e-10);
    const auto coarse = hardy_lhs(f, alpha, q, 1e-6);
    r.lhs = fine.value;
    r.converged = fine.converged;
    r.drift = fine.value == coarse.value ? 0.0 : std::abs(fine.value - coarse.value) / std::abs(fine.value);
    r.ratio = r.rhs == 0.0 ? (r.lhs == 0.0 ? 0.0 : kInf) : r.lhs / r.rhs;
    return r;
}

double hardy_envelope(double alpha, Exponent q, double gm1_constant) {
    if (!(alpha > 0.0)) throw std::invalid_argument("hardy_envelope: alpha must be > 0");
    if (q.is_infinite() || q.value() >= 1.0) return 1.0 / alpha;
    const double qq = q.value();
    return std::log(2.0) * std::max(gm1_constant, 1.0) * std::pow(std::exp2(alpha * qq) - 1.0, -1.0 / qq);
}

double hardy_default_eps(const HeadedStepFunction& f) {
    if (!f.head()) throw std::invalid_argument("hardy_default_eps: f has no head");
    return std::min(0.5, f.head()->exponent / 2);
}

HeadedStepFunction hardy_shift(const HeadedStepFunction& f, double alpha, double eps) {
    if (!f.head() || f.pieces() != 0)
        throw std::invalid_argument("hardy_shift: only head-only functions stay representable");
    if (!(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("hardy_shift: eps must lie in (0, 1)");
    PowerHead h = *f.head();
    h.exponent += eps - alpha;
    return HeadedStepFunction(h, {}, {});
}

HeadedStepFunction product_step(const HeadedStepFunction& f, const HeadedStepFunction& g) {
    const double end = std::min(f.support_end(), g.support_end());
    std::optional<PowerHead> head;
    if (f.head() && g.head()) {
        if (f.head()->end != g.head()->end)
            throw std::invalid_argument("product_step: heads must end at the same point");
        head = PowerHead{f.head()->coeff * g.head()->coeff, f.head()->exponent + g.head()->exponent,
                         f.head()->end};
    } else if (f.head() || g.head()) {
        const auto& hf = f.head() ? f : g;
        const auto& st = f.head() ? g : f;
        const double x0 = hf.head()->end;
        const Complex v = st.pieces() ? st.values()[0] : Complex{};
        if (st.pieces() == 0 || st.right(0) < x0 || v.imag() != 0.0 || !(v.real() > 0.0))
            throw std::invalid_argument(
                "product_step: headless factor must be a positive constant on the head");
        head = PowerHead{hf.head()->coeff * v.real(), hf.head()->exponent, x0};
    }
    const double start = head ? head->end : 0.0;
    std::vector<double> bp;
    for (double x : f.breakpoints())
        if (x > start && x < end) bp.push_back(x);
    for (double x : g.breakpoints())
        if (x > start && x < end) bp.push_back(x);
    if (end > start) bp.push_back(end);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    std::vector<Complex> vals(bp.size());
    for (std::size_t j = 0; j < bp.size(); ++j) {
        const double l = j == 0 ? start : bp[j - 1];
        const double mid = 0.5 * (l + bp[j]);
        vals[j] = f(mid) * g(mid);
    }
    if (head) return HeadedStepFunction(*head, std::move(bp), std::move(vals));
    return HeadedStepFunction(StepFunction(std::move(bp), std::move(vals)));
}

VerificationReport gm_product_report(const HeadedStepFunction& f, const HeadedStepFunction& g) {
    const double b1 = std::max(1.0, gm_constant_step(f, GMClass::GM).constant);
    const double b2 = std::max(1.0, gm_constant_step(g, GMClass::GM).constant);
    const double bfg = gm_constant_step(product_step(f, g), GMClass::GM).constant;
    return bound_check("gm_product", bfg, b1 * b2, 4.0);
}

}  // namespace lgm
