// lorentz-gm: command-line driver for the lgm library.
//
// Exit codes: 0 success, 1 malformed input, 2 failed verification,
// 3 quadrature nonconvergence.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lgm/acceptance.hpp"
#include "lgm/fourier.hpp"
#include "lgm/gm.hpp"
#include "lgm/hardy.hpp"
#include "lgm/interpolate.hpp"
#include "lgm/io.hpp"
#include "lgm/norms.hpp"
#include "lgm/rearrange.hpp"

namespace {

using namespace lgm;

enum Exit { kOk = 0, kInput = 1, kVerification = 2, kNonconvergence = 3 };

struct Options {
    std::string seq, fn;
    std::string p = "2", q = "2";
    std::string dual_p, dual_q = "2";
    double alpha = 0.0;
    std::optional<double> phi;
    std::optional<double> t;
    std::string t_grid;
    double theta = 0.5;
    double tol = 1e-8;
    int grid = 4096;
    std::uint64_t seed = 42;
    std::string suite = "all";
    std::string out;
};

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Exponent parse_exponent(const std::string& s) {
    if (s == "inf" || s == "infinity") return kInfinity;
    double v = 0.0;
    try {
        std::size_t used = 0;
        v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw InputError("not an exponent: " + s);
    }
    if (!(v > 0.0)) throw InputError("exponents must be positive: " + s);
    if (std::isinf(v)) return kInfinity;
    return v;
}

// "lo:hi:n" with n log-spaced points.
std::vector<double> parse_t_grid(const std::string& s) {
    double lo = 0, hi = 0;
    int n = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || !(lo > 0) || !(hi >= lo) || n < 1)
        throw InputError("--t-grid expects lo:hi:n with 0 < lo <= hi and n >= 1");
    std::vector<double> ts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        ts[static_cast<std::size_t>(i)] = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return ts;
}

std::vector<double> t_values(const Options& o) {
    if (!o.t_grid.empty()) return parse_t_grid(o.t_grid);
    if (!o.t) throw InputError("--t or --t-grid is required");
    if (!(*o.t > 0.0)) throw InputError("--t must be positive");
    return {*o.t};
}

ComplexSeq need_seq(const Options& o) {
    if (o.seq.empty()) throw InputError("--seq is required");
    return load_sequence(o.seq);
}

HeadedStepFunction need_fn(const Options& o) {
    if (o.fn.empty()) throw InputError("--fn is required");
    return load_function(o.fn);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
}

int cmd_rearrange(const Options& o) {
    std::ostringstream s;
    if (!o.seq.empty()) {
        const auto r = rearrange_seq(need_seq(o));
        s << "k,value\n";
        for (std::size_t k = 0; k < r.size(); ++k) s << k + 1 << "," << num(r[k]) << "\n";
    } else {
        const auto f = need_fn(o);
        if (f.has_head()) throw InputError("rearrange: headed functions are not supported");
        const auto r = rearrange_step(f.as_step());
        s << "left,right,value\n";
        double left = 0.0;
        for (std::size_t j = 0; j < r.pieces(); ++j) {
            s << num(left) << "," << num(r.breakpoints()[j]) << "," << num(r.values()[j]) << "\n";
            left = r.breakpoints()[j];
        }
    }
    emit(o, s.str());
    return kOk;
}

int cmd_norm(const Options& o) {
    const PQ pq{parse_exponent(o.p), parse_exponent(o.q)};
    std::ostringstream s;
    s << "quantity,value\n";
    if (!o.seq.empty()) {
        const auto a = need_seq(o);
        s << "weighted," << num(weighted_norm_seq(a, pq)) << "\n";
        if (pq.lorentz_admissible()) s << "lorentz," << num(lorentz_norm_seq(a, pq)) << "\n";
    } else {
        const auto f = need_fn(o);
        s << "weighted," << num(weighted_norm_step(f, pq)) << "\n";
        if (!f.has_head()) {
            const auto g = f.as_step();
            if (pq.lorentz_admissible()) s << "lorentz," << num(lorentz_norm_step(g, pq)) << "\n";
            s << "dyadic," << num(dyadic_norm_full(g, pq)) << "\n";
            s << "dyadic_rearranged," << num(dyadic_norm_full(rearrange_step(g), pq)) << "\n";
        }
    }
    emit(o, s.str());
    return kOk;
}

int cmd_gm(const Options& o) {
    std::ostringstream s;
    s << "[";
    bool in_sector = true;
    if (!o.seq.empty()) {
        const auto a = need_seq(o);
        s << to_json(gms_constant(a)) << "," << to_json(gms1_constant(a)) << "," << to_json(gms2_constant(a));
        if (o.phi) {
            const Sector sec(o.alpha, *o.phi);
            for (const auto& z : a.values()) in_sector = in_sector && sec.contains(z);
        }
    } else {
        const auto f = need_fn(o);
        s << to_json(gm_constant_step(f, GMClass::GM)) << "," << to_json(gm_constant_step(f, GMClass::GM1)) << ","
          << to_json(gm_constant_step(f, GMClass::GM2));
        if (o.phi) {
            const Sector sec(o.alpha, *o.phi);
            for (const auto& z : f.values()) in_sector = in_sector && sec.contains(z);
            if (f.head()) in_sector = in_sector && sec.contains(f.head()->coeff);
        }
    }
    s << "]\n";
    if (o.phi) s << "{\"in_sector\":" << (in_sector ? "true" : "false") << "}\n";
    emit(o, s.str());
    return in_sector ? kOk : kVerification;
}

int cmd_kfun(const Options& o) {
    const auto c = need_seq(o);
    const auto ts = t_values(o);
    std::ostringstream s;
    if (o.t_grid.empty()) {
        s << num(k_functional(c, ts.front())) << "\n";
    } else {
        s << "t,K\n";
        for (double t : ts) s << num(t) << "," << num(k_functional(c, t)) << "\n";
    }
    emit(o, s.str());
    return kOk;
}

int cmd_interp(const Options& o) {
    const auto c = need_seq(o);
    const auto q = parse_exponent(o.q);
    if (!(o.theta > 0.0 && o.theta < 1.0)) throw InputError("--theta must lie in (0, 1)");
    const auto k = interpolation_norm(c, o.theta, q, o.tol);
    std::ostringstream s;
    s << "quantity,value\n";
    s << "interpolation_norm," << num(k.value) << "\n";
    s << "gilbert_functional," << num(gilbert_functional(c, o.theta, q)) << "\n";
    s << "weighted_norm," << num(weighted_norm_seq(c, PQ{1.0 / o.theta, q})) << "\n";
    emit(o, s.str());
    return k.converged ? kOk : kNonconvergence;
}

int cmd_decompose(const Options& o) {
    const auto c = need_seq(o);
    std::ostringstream s;
    s << "t,cost,K,ratio\n";
    bool ok = true;
    for (double t : t_values(o)) {
        const auto d = gms_decomposition(c, t, o.alpha);
        s << num(t) << "," << num(d.cost) << "," << num(d.k_value) << "," << num(d.ratio) << "\n";
        ok = ok && d.ratio <= 4.5 * (1 + 1e-12);
    }
    emit(o, s.str());
    return ok ? kOk : kVerification;
}

int cmd_fourier(const Options& o) {
    const auto c = need_seq(o);
    if (c.empty()) throw InputError("fourier: empty coefficient list");
    const auto grid = uniform_grid(static_cast<std::size_t>(std::max(1, o.grid)));
    const double B = std::max(1.0, gms2_constant(c).constant);
    std::vector<VerificationReport> rows;
    rows.push_back(dirichlet_bound_report(c, 1, c.size(), grid));
    rows.push_back(gm_series_bound_report(c, 1, c.size(), grid, B));
    const auto l1 = l1_norm_trig(c, o.tol);
    rows.push_back(l1_bound_report(c, o.tol));
    rows.push_back(weak_l1_report(c));
    bool converged = l1.converged && weak_l1_estimate(c).converged;
    std::string text = to_csv(rows);
    if (!o.dual_p.empty()) {
        const PQ pq{parse_exponent(o.dual_p), parse_exponent(o.dual_q)};
        if (pq.p.is_infinite() || !(pq.p.value() > 1.0)) throw InputError("duality needs 1 < p < inf");
        const auto d = duality_ratio(c, pq);
        text += "duality_sequence_norm," + num(d.sequence_norm) + "\n";
        text += "duality_function_norm," + num(d.function_norm) + "\n";
        text += "duality_ratio," + num(d.ratio) + "\n";
        converged = converged && d.converged;
    }
    emit(o, text);
    // A bound row that failed only for lack of convergence is not a verdict.
    if (!converged) return kNonconvergence;
    for (const auto& r : rows)
        if (!r.pass) return kVerification;
    return kOk;
}

int cmd_hardy(const Options& o) {
    const auto f = need_fn(o);
    if (!(o.alpha > 0.0)) throw InputError("--alpha must be positive");
    const auto q = parse_exponent(o.q);
    const auto r = hardy_report(f, o.alpha, q);
    std::ostringstream s;
    s << "alpha,q,lhs,rhs,ratio,drift\n";
    s << num(o.alpha) << "," << o.q << "," << num(r.lhs) << "," << num(r.rhs) << "," << num(r.ratio) << ","
      << num(r.drift) << "\n";
    emit(o, s.str());
    if (!r.converged) return kNonconvergence;
    return r.stable() ? kOk : kVerification;
}

std::vector<int> parse_suite(const std::string& suite) {
    if (suite == "all") return {};
    std::vector<int> ids;
    std::istringstream in(suite);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const int id = std::stoi(item, &used);
            if (used != item.size() || id < 1 || id > kCriterionCount) throw std::invalid_argument(item);
            ids.push_back(id);
        } catch (const std::exception&) {
            throw InputError("--suite expects \"all\" or a comma list of criterion numbers 1..11");
        }
    }
    return ids;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int cmd_verify(const Options& o) {
    const auto results = run_acceptance(o.seed, parse_suite(o.suite));
    bool all = true;
    std::ostringstream csv;
    csv << "# seed=" << o.seed << "\n";
    csv << "criterion,name,checks,detail\n";
    for (const auto& r : results) {
        std::printf("[%s] %2d %-32s %7.2fs/%3.0fs  %s\n", r.pass() ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.time_limit, r.detail.c_str());
        csv << r.id << "," << csv_quote(r.name) << "," << (r.checks_pass ? "pass" : "fail") << ","
            << csv_quote(r.detail) << "\n";
        all = all && r.pass();
    }
    std::fflush(stdout);
    if (!o.out.empty()) emit(o, csv.str());
    return all ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorentz norms, general monotone sequences and functions"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seq", o.seq, "sequence JSON file");
        sub->add_option("--fn", o.fn, "step function JSON file");
        sub->add_option("--out", o.out, "write output to this file");
    };
    auto* rearrange = app.add_subcommand("rearrange", "decreasing rearrangement");
    common(rearrange);
    auto* norm = app.add_subcommand("norm", "weighted, Lorentz and dyadic norms");
    common(norm);
    norm->add_option("--p", o.p, "p exponent (number or inf)");
    norm->add_option("--q", o.q, "q exponent (number or inf)");
    auto* gm = app.add_subcommand("gm", "general monotonicity constants");
    common(gm);
    gm->add_option("--alpha", o.alpha, "sector direction");
    gm->add_option("--phi", o.phi, "sector half-aperture");
    auto* kfun = app.add_subcommand("kfun", "K-functional");
    common(kfun);
    kfun->add_option("--t", o.t, "t > 0");
    kfun->add_option("--t-grid", o.t_grid, "lo:hi:n log-spaced grid");
    auto* interp = app.add_subcommand("interp", "K-method norm and Gilbert functional");
    common(interp);
    interp->add_option("--theta", o.theta, "theta in (0, 1)");
    interp->add_option("--q", o.q, "q exponent");
    interp->add_option("--tol", o.tol, "quadrature relative tolerance");
    auto* decompose = app.add_subcommand("decompose", "cone-constrained decomposition");
    common(decompose);
    decompose->add_option("--t", o.t, "t > 0");
    decompose->add_option("--t-grid", o.t_grid, "lo:hi:n log-spaced grid");
    decompose->add_option("--alpha", o.alpha, "sector direction");
    auto* fourier = app.add_subcommand("fourier", "trigonometric polynomial bounds");
    common(fourier);
    fourier->add_option("--grid", o.grid, "points in the dense x grid");
    fourier->add_option("--tol", o.tol, "L1 quadrature tolerance");
    fourier->add_option("--p", o.dual_p, "Lorentz p for the duality ratio");
    fourier->add_option("--q", o.dual_q, "Lorentz q for the duality ratio");
    auto* hardy = app.add_subcommand("hardy", "Hardy inequality report");
    common(hardy);
    hardy->add_option("--alpha", o.alpha, "alpha > 0");
    hardy->add_option("--q", o.q, "q exponent");
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--suite", o.suite, "\"all\" or a comma list of criteria");
    verify->add_option("--seed", o.seed, "generator seed");
    verify->add_option("--out", o.out, "CSV output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (rearrange->parsed()) return cmd_rearrange(o);
        if (norm->parsed()) return cmd_norm(o);
        if (gm->parsed()) return cmd_gm(o);
        if (kfun->parsed()) return cmd_kfun(o);
        if (interp->parsed()) return cmd_interp(o);
        if (decompose->parsed()) return cmd_decompose(o);
        if (fourier->parsed()) return cmd_fourier(o);
        if (hardy->parsed()) return cmd_hardy(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
