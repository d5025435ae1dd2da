#include "lgm/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace lgm {

VerificationReport bound_check(std::string name, double lhs, double rhs, double constant,
                               double rel_tol) {
    VerificationReport r{std::move(name), lhs, rhs, constant, 0.0, false};
    if (std::isnan(lhs) || std::isnan(rhs) || std::isnan(constant)) return r;
    if (std::isinf(rhs)) {
        r.ratio = 0.0;
        r.pass = true;
        return r;
    }
    if (rhs == 0.0) {
        r.ratio = lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        r.pass = lhs == 0.0;
        return r;
    }
    r.ratio = lhs / rhs;
    r.pass = r.ratio <= constant * (1.0 + rel_tol);
    return r;
}

std::string report_csv_header() { return "name,lhs,rhs,constant,ratio,pass"; }

std::string to_csv_row(const VerificationReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g,%.17g,%s", r.lhs, r.rhs, r.constant,
                  r.ratio, r.pass ? "true" : "false");
    return r.name + buf;
}

std::string to_csv(std::span<const VerificationReport> rows) {
    std::string out = report_csv_header() + "\n";
    for (const auto& r : rows) out += to_csv_row(r) + "\n";
    return out;
}

}  // namespace lgm
