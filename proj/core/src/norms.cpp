#include "lgm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace lgm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (r^e - l^e) / e for 0 < l < r, accurate when r is close to l.
double power_increment(double l, double r, double e) {
    if (l == 0.0) return std::pow(r, e) / e;
    return std::pow(l, e) * std::expm1(e * std::log(r / l)) / e;
}

void require_lorentz(const PQ& pq, const char* who) {
    if (!pq.lorentz_admissible())
        throw std::invalid_argument(std::string(who) +
                                    ": Lorentz norm needs 0 < p < inf or p = q = inf");
}

}  // namespace

double weighted_norm_seq(const ComplexSeq& a, const PQ& pq) {
    const double inv_p = pq.p.reciprocal();
    if (pq.q.is_infinite()) {
        double sup = 0.0;
        for (std::size_t n = 1; n <= a.size(); ++n)
            sup = std::max(sup, std::pow(static_cast<double>(n), inv_p) * a.modulus(n));
        return sup;
    }
    const double q = pq.q.value();
    double sum = 0.0;
    for (std::size_t n = 1; n <= a.size(); ++n) {
        const double m = a.modulus(n);
        if (m == 0.0) continue;
        sum += std::pow(m, q) * std::pow(static_cast<double>(n), q * inv_p - 1.0);
    }
    return std::pow(sum, 1.0 / q);
}

double power_weighted_norm(const HeadedStepFunction& f, double s, Exponent q_ext) {
    const auto& head = f.head();
    if (q_ext.is_infinite()) {
        double sup = 0.0;
        if (head) {
            const double e = head->exponent + s;
            if (e < 0.0) return kInf;
            sup = head->coeff * std::pow(head->end, e);
        }
        for (std::size_t j = 0; j < f.pieces(); ++j) {
            const double m = std::abs(f.values()[j]);
            if (m == 0.0) continue;
            const double l = f.left(j), r = f.right(j);
            double piece;
            if (s > 0.0) piece = m * std::pow(r, s);
            else if (s == 0.0) piece = m;
            else if (l == 0.0) return kInf;
            else piece = m * std::pow(l, s);
            sup = std::max(sup, piece);
        }
        return sup;
    }

    const double q = q_ext.value();
    double total = 0.0;
    if (head) {
        const double e = (head->exponent + s) * q;
        if (e <= 0.0) return kInf;
        total += std::pow(head->coeff, q) * std::pow(head->end, e) / e;
    }
    const double e = s * q;
    for (std::size_t j = 0; j < f.pieces(); ++j) {
        const double m = std::abs(f.values()[j]);
        if (m == 0.0) continue;
        const double l = f.left(j), r = f.right(j);
        const double mq = std::pow(m, q);
        if (e == 0.0) {
            if (l == 0.0) return kInf;
            total += mq * std::log(r / l);
        } else {
            if (l == 0.0 && e < 0.0) return kInf;
            total += mq * power_increment(l, r, e);
        }
    }
    return std::pow(total, 1.0 / q);
}

double weighted_norm_step(const HeadedStepFunction& f, const PQ& pq) {
    return power_weighted_norm(f, pq.p.reciprocal(), pq.q);
}

double lorentz_norm_seq(const ComplexSeq& a, const PQ& pq) {
    require_lorentz(pq, "lorentz_norm_seq");
    const auto star = rearrange_seq(a);
    return weighted_norm_seq(ComplexSeq::from_real(star), pq);
}

double lorentz_norm_step(const StepFunction& f, const PQ& pq) {
    require_lorentz(pq, "lorentz_norm_step");
    return weighted_norm_step(rearrange_step(f).to_step(), pq);
}

namespace {

double dyadic_sum(const std::function<double(double)>& modulus_at, const PQ& pq, DyadicRange range) {
    const double inv_p = pq.p.reciprocal();
    if (pq.q.is_infinite()) {
        double sup = 0.0;
        for (int k = range.lo; k <= range.hi; ++k)
            sup = std::max(sup, std::exp2(k * inv_p) * modulus_at(std::ldexp(1.0, k)));
        return sup;
    }
    const double q = pq.q.value();
    double sum = 0.0;
    for (int k = range.lo; k <= range.hi; ++k) {
        const double m = modulus_at(std::ldexp(1.0, k));
        if (m == 0.0) continue;
        sum += std::exp2(k * q * inv_p) * std::pow(m, q);
    }
    return std::pow(sum, 1.0 / q);
}

// Dyadic sum over all of Z given that |f(2^k)| = head_modulus for k <= k0.
double dyadic_full(const std::function<double(double)>& modulus_at, const PQ& pq,
                   double head_modulus, int k0, int k_hi) {
    const double inv_p = pq.p.reciprocal();
    if (pq.q.is_infinite()) {
        double sup = head_modulus * std::exp2(k0 * inv_p);
        if (head_modulus > 0.0 && inv_p == 0.0) sup = head_modulus;
        return std::max(sup, dyadic_sum(modulus_at, pq, {k0 + 1, k_hi}));
    }
    const double q = pq.q.value();
    double tail = 0.0;
    if (head_modulus > 0.0) {
        if (inv_p == 0.0) return kInf;
        const double ratio = std::exp2(-q * inv_p);
        tail = std::pow(head_modulus, q) * std::exp2(k0 * q * inv_p) / (1.0 - ratio);
    }
    const double body = dyadic_sum(modulus_at, pq, {k0 + 1, k_hi});
    return std::pow(tail + std::pow(body, q), 1.0 / q);
}

}  // namespace

double dyadic_norm(const StepFunction& f, const PQ& pq, DyadicRange range) {
    return dyadic_sum([&](double x) { return std::abs(f(x)); }, pq, range);
}

double dyadic_norm(const DecreasingStep& f, const PQ& pq, DyadicRange range) {
    return dyadic_sum([&](double x) { return f(x); }, pq, range);
}

DyadicRange minimal_dyadic_range(const StepFunction& f) {
    if (f.empty()) return {0, -1};
    return {std::ilogb(f.breakpoints().front()), std::ilogb(f.support_end())};
}

double dyadic_norm_full(const StepFunction& f, const PQ& pq) {
    if (f.empty()) return 0.0;
    // 2^k <= x_1 iff k <= ilogb(x_1): those points all land in the first piece.
    const int k0 = std::ilogb(f.breakpoints().front());
    const int k_hi = std::ilogb(f.support_end());
    return dyadic_full([&](double x) { return std::abs(f(x)); }, pq, std::abs(f.values().front()),
                       k0, k_hi);
}

double dyadic_norm_full(const DecreasingStep& f, const PQ& pq) {
    if (f.pieces() == 0) return 0.0;
    // Right-continuous: 2^k < x_1 lands in the first piece.
    const double x1 = f.breakpoints().front();
    int k0 = std::ilogb(x1);
    if (std::ldexp(1.0, k0) == x1) --k0;
    const int k_hi = std::ilogb(f.support_end());
    return dyadic_full([&](double x) { return f(x); }, pq, f.values().front(), k0, k_hi);
}

bool EquivalenceReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

double dyadic_shift_constant(double p, double q) {
    return std::max(std::exp2(q / p - 1.0), std::pow(4.0, q / p - 1.0));
}

EquivalenceReport equivalence_report(const StepFunction& f, const PQ& pq, double B) {
    if (pq.p.is_infinite()) throw std::invalid_argument("equivalence_report: requires finite p");
    if (!std::isfinite(B)) throw std::invalid_argument("equivalence_report: f is not in GM_1 (B = inf)");
    B = std::max(B, 1.0);
    const double p = pq.p.value();
    const DecreasingStep fstar = rearrange_step(f);

    EquivalenceReport rep;
    rep.gm1_constant = B;
    rep.lorentz = weighted_norm_step(fstar.to_step(), pq);
    rep.weighted = weighted_norm_step(f, pq);
    rep.dyadic = dyadic_norm_full(f, pq);
    rep.dyadic_rearranged = dyadic_norm_full(fstar, pq);

    const double two_p = std::exp2(1.0 / p);
    auto& c = rep.checks;
    if (pq.q.is_infinite()) {
        c.push_back(bound_check("lorentz<=weighted", rep.lorentz, rep.weighted, 1.0));
        c.push_back(bound_check("weighted<=dyadic", rep.weighted, rep.dyadic, two_p * B));
        c.push_back(bound_check("dyadic<=weighted", rep.dyadic, rep.weighted, two_p * B));
        c.push_back(bound_check("weighted<=lorentz", rep.weighted, rep.lorentz, two_p * B));
        c.push_back(bound_check("lorentz<=dyadic_rearranged", rep.lorentz, rep.dyadic_rearranged, two_p));
        c.push_back(bound_check("dyadic_rearranged<=lorentz", rep.dyadic_rearranged, rep.lorentz, two_p));
        return rep;
    }

    const double q = pq.q.value();
    const double ln2q = std::pow(std::log(2.0), 1.0 / q);
    const double shift = std::pow(4.0 * dyadic_shift_constant(p, q), 1.0 / q);
    c.push_back(bound_check("weighted<=dyadic", rep.weighted, rep.dyadic, two_p * B * ln2q));
    c.push_back(bound_check("dyadic<=lorentz", rep.dyadic, rep.lorentz, B * shift));
    if (p <= q)
        c.push_back(bound_check("lorentz<=weighted", rep.lorentz, rep.weighted, 1.0));
    else
        c.push_back(bound_check("lorentz<=weighted", rep.lorentz, rep.weighted,
                                std::pow(2.0 * p / q, 1.0 / q) * B * B));
    c.push_back(bound_check("lorentz<=dyadic_rearranged", rep.lorentz, rep.dyadic_rearranged,
                            two_p * ln2q));
    c.push_back(bound_check("dyadic_rearranged<=lorentz", rep.dyadic_rearranged, rep.lorentz, shift));
    return rep;
}

}  // namespace lgm
