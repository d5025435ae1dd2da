#include "lgm/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "lgm/gm.hpp"
#include "lgm/norms.hpp"

namespace lgm {

namespace {

void require_window(const ComplexSeq& c, std::size_t m, std::size_t N, const char* who) {
    if (m < 1 || m > N) throw std::invalid_argument(std::string(who) + ": need 1 <= m <= N");
    (void)c;
}

double clamp_b(double B) { return std::max(B, 1.0); }

}  // namespace

Complex partial_sum(const ComplexSeq& c, std::size_t m, std::size_t N, double x) {
    require_window(c, m, N, "partial_sum");
    Complex s{};
    for (std::size_t k = m; k <= N; ++k) s += c.at(k) * std::polar(1.0, static_cast<double>(k) * x);
    return s;
}

Complex trig_eval(const ComplexSeq& c, double x) {
    const Complex z = std::polar(1.0, x);
    Complex acc{};
    for (std::size_t k = c.size(); k >= 1; --k) acc = (acc + c.at(k)) * z;
    return acc;
}

std::vector<double> uniform_grid(std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = kPi * static_cast<double>(i + 1) / static_cast<double>(n);
    return g;
}

namespace {

VerificationReport worst_over_grid(std::string name, const ComplexSeq& c, std::size_t m,
                                   std::size_t N, std::span<const double> x_grid, double base,
                                   double constant) {
    VerificationReport worst = bound_check(name, 0.0, 1.0, constant);
    bool have = false;
    for (double x : x_grid) {
        if (!(x > 0.0) || x > kPi * (1 + 1e-15))
            throw std::invalid_argument(name + ": grid points must lie in (0, pi]");
        auto r = bound_check(name, std::abs(partial_sum(c, m, N, x)), base / x, constant);
        // Keep the first violation, otherwise the largest ratio.
        if (!have || (worst.pass && (!r.pass || r.ratio > worst.ratio))) worst = r;
        have = true;
    }
    return worst;
}

}  // namespace

VerificationReport dirichlet_bound_report(const ComplexSeq& c, std::size_t m, std::size_t N,
                                          std::span<const double> x_grid) {
    require_window(c, m, N, "dirichlet_bound_report");
    double tv = 0.0;
    for (std::size_t k = m; k < N; ++k) tv += std::abs(c.at(k + 1) - c.at(k));
    return worst_over_grid("dirichlet_bound", c, m, N, x_grid, c.modulus(m) / 2 + tv, 4 * kPi);
}

VerificationReport gm_series_bound_report(const ComplexSeq& c, std::size_t m, std::size_t N,
                                          std::span<const double> x_grid, double B) {
    require_window(c, m, N, "gm_series_bound_report");
    double tail = 0.0;
    for (std::size_t k = m + 1; k <= N; ++k) tail += c.modulus(k) / static_cast<double>(k);
    return worst_over_grid("gm_series_bound", c, m, N, x_grid, c.modulus(m) + tail,
                           6 * kPi * clamp_b(B));
}

QuadValue l1_norm_trig(const ComplexSeq& c, double rel_tol) {
    if (c.empty()) return {};
    const std::size_t panels = 4 * c.size();
    std::vector<double> breaks(panels + 1);
    for (std::size_t i = 0; i <= panels; ++i)
        breaks[i] = kPi * static_cast<double>(i) / static_cast<double>(panels);
    return integrate_gk_global([&](double x) { return std::abs(trig_eval(c, x)); }, breaks, rel_tol);
}

VerificationReport l1_bound_report(const ComplexSeq& c, double rel_tol) {
    const auto l1 = l1_norm_trig(c, rel_tol);
    const double B = clamp_b(gms2_constant(c).constant);
    double s = 0.0;
    for (std::size_t k = 2; k <= c.size(); ++k) {
        const double kk = static_cast<double>(k);
        s += c.modulus(k) * std::log(kk) / kk;
    }
    auto r = bound_check("l1_bound", l1.value, 2 * kPi * c.modulus(1) + 27 * kPi * B * s, 1.0);
    if (!l1.converged) r.pass = false;
    return r;
}

std::vector<double> sample_modulus(const ComplexSeq& c, std::size_t M) {
    if (M < 1) throw std::invalid_argument("sample_modulus: M must be >= 1");
    std::vector<double> out(M, 0.0);
    if (c.empty()) return out;
    // f((i + 1/2) pi / M) = sum_k (c_k e^{i k pi/(2M)}) e^{2 pi i k i / (2M)}.
    const std::size_t L = std::max<std::size_t>(2 * M, c.size() + 1);
    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * L));
    if (!buf) throw std::bad_alloc();
    std::fill_n(reinterpret_cast<double*>(buf), 2 * L, 0.0);
    if (L == 2 * M) {
        for (std::size_t k = 1; k <= c.size(); ++k) {
            const Complex v = c.at(k) * std::polar(1.0, kPi * static_cast<double>(k) / static_cast<double>(2 * M));
            buf[k][0] = v.real();
            buf[k][1] = v.imag();
        }
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(L), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
        for (std::size_t i = 0; i < M; ++i) out[i] = std::hypot(buf[i][0], buf[i][1]);
    } else {
        for (std::size_t i = 0; i < M; ++i)
            out[i] = std::abs(trig_eval(c, kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(M)));
    }
    fftw_free(buf);
    return out;
}

namespace {

double weak_from_samples(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    const double cell = kPi / static_cast<double>(v.size());
    double best = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j)
        best = std::max(best, v[j] * static_cast<double>(j + 1) * cell);
    return best;
}

}  // namespace

WeakL1Estimate weak_l1_estimate(const ComplexSeq& c, std::size_t max_samples) {
    std::size_t M = std::size_t{1} << 16;
    WeakL1Estimate est;
    double prev = weak_from_samples(sample_modulus(c, M));
    est.value = prev;
    est.samples = M;
    est.converged = false;
    while (2 * M <= max_samples) {
        M *= 2;
        const double cur = weak_from_samples(sample_modulus(c, M));
        est.value = cur;
        est.samples = M;
        const bool settled = cur == prev || std::abs(cur - prev) < 1e-3 * std::abs(cur);
        prev = cur;
        if (settled) {
            est.converged = true;
            break;
        }
    }
    return est;
}

VerificationReport weak_l1_report(const ComplexSeq& c) {
    const auto est = weak_l1_estimate(c);
    const double B = clamp_b(gms2_constant(c).constant);
    double norm = 0.0;
    for (std::size_t k = 1; k <= c.size(); ++k) norm += c.modulus(k) / static_cast<double>(k);
    auto r = bound_check("weak_l1_bound", est.value, norm, 6 * kPi * B);
    if (!est.converged) r.pass = false;
    return r;
}

TwoSidedSeq fourier_coeffs_step(const StepFunction& f, int n_max) {
    if (n_max < 0) throw std::invalid_argument("fourier_coeffs_step: n_max must be >= 0");
    if (f.support_end() > 2 * kPi * (1 + 1e-12))
        throw std::invalid_argument("fourier_coeffs_step: f must vanish beyond 2 pi");
    std::vector<Complex> out(2 * static_cast<std::size_t>(n_max) + 1);
    for (int n = -n_max; n <= n_max; ++n) {
        Complex s{};
        for (std::size_t j = 0; j < f.pieces(); ++j) {
            const double l = f.left(j), r = f.right(j);
            if (n == 0) {
                s += f.values()[j] * (r - l);
            } else {
                const double nn = static_cast<double>(n);
                s += f.values()[j] * (std::polar(1.0, -nn * l) - std::polar(1.0, -nn * r)) /
                     Complex(0.0, nn);
            }
        }
        out[static_cast<std::size_t>(n + n_max)] = s / (2 * kPi);
    }
    return TwoSidedSeq(n_max, std::move(out));
}

Complex cesaro_mean(const TwoSidedSeq& c, int n) {
    if (n < 0) throw std::invalid_argument("cesaro_mean: n must be >= 0");
    Complex s{};
    for (int k = -n; k <= n; ++k) s += c.at(k);
    return s / static_cast<double>(2 * n + 1);
}

double coefficient_energy(const StepFunction& f) {
    if (f.empty()) return 0.0;
    if (f.support_end() > 2 * kPi * (1 + 1e-12))
        throw std::invalid_argument("coefficient_energy: f must vanish beyond 2 pi");
    // Jumps of the periodic extension, the one at 0 wrapping around 2 pi.
    const bool full = std::abs(f.support_end() - 2 * kPi) <= 2 * kPi * 1e-12;
    const std::size_t M = f.pieces();
    std::vector<double> at{0.0};
    std::vector<Complex> jump{f.values()[0] - (full ? f.values()[M - 1] : Complex{})};
    for (std::size_t j = 0; j + 1 < M; ++j) {
        at.push_back(f.right(j));
        jump.push_back(f.values()[j + 1] - f.values()[j]);
    }
    if (!full) {
        at.push_back(f.support_end());
        jump.push_back(-f.values()[M - 1]);
    }
    // sum_{n != 0} e^{i n theta} / n^2 = 2 (pi^2/6 - pi theta/2 + theta^2/4), theta in [0, 2pi].
    auto kernel = [](double theta) {
        theta = std::abs(theta);
        return 2 * (kPi * kPi / 6 - kPi * theta / 2 + theta * theta / 4);
    };
    double cross = 0.0;
    for (std::size_t j = 0; j < at.size(); ++j)
        for (std::size_t l = 0; l < at.size(); ++l)
            cross += (jump[j] * std::conj(jump[l])).real() * kernel(at[j] - at[l]);
    Complex c0{};
    for (std::size_t j = 0; j < M; ++j) c0 += f.values()[j] * (f.right(j) - f.left(j));
    c0 /= 2 * kPi;
    return std::norm(c0) + cross / (4 * kPi * kPi);
}

double mean_square(const StepFunction& f) {
    double s = 0.0;
    for (std::size_t j = 0; j < f.pieces(); ++j) s += std::norm(f.values()[j]) * (f.right(j) - f.left(j));
    return s / (2 * kPi);
}

double sampled_lorentz_norm(const ComplexSeq& c, const PQ& pq, std::size_t M) {
    auto v = sample_modulus(c, M);
    std::sort(v.begin(), v.end(), std::greater<>());
    std::vector<double> bp(M);
    for (std::size_t i = 0; i < M; ++i) bp[i] = kPi * static_cast<double>(i + 1) / static_cast<double>(M);
    return weighted_norm_step(StepFunction(std::move(bp), std::vector<Complex>(v.begin(), v.end())), pq);
}

DualityReport duality_ratio(const ComplexSeq& c, const PQ& pq, double drift_tol,
                            std::size_t max_samples) {
    if (pq.p.is_infinite()) throw std::invalid_argument("duality_ratio: requires 1 < p < inf");
    const double p = pq.p.value();
    DualityReport rep;
    rep.sequence_norm = lorentz_norm_seq(c, PQ{PQ::conjugate(p), pq.q});
    std::size_t M = std::max<std::size_t>(std::size_t{1} << 12, 16 * c.size());
    double prev = sampled_lorentz_norm(c, pq, M);
    rep.function_norm = prev;
    rep.samples = M;
    rep.converged = false;
    while (2 * M <= max_samples) {
        M *= 2;
        const double cur = sampled_lorentz_norm(c, pq, M);
        rep.function_norm = cur;
        rep.samples = M;
        rep.drift = cur == prev ? 0.0 : std::abs(cur - prev) / std::abs(cur);
        prev = cur;
        if (rep.drift < drift_tol) {
            rep.converged = true;
            break;
        }
    }
    rep.ratio = rep.function_norm == 0.0 ? (rep.sequence_norm == 0.0 ? 0.0
                                                                      : std::numeric_limits<double>::infinity())
                                         : rep.sequence_norm / rep.function_norm;
    return rep;
}

}  // namespace lgm
