#include "eupmol/root_finding.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include <boost/math/tools/toms748_solve.hpp>

#include "eupmol/errors.hpp"

namespace eupmol {

RootResult find_root(const std::function<double(double)>& f, double a, double b, double rel_tol, int max_iter) {
    const double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0};
    if (fb == 0.0) return {b, 0.0, 0};
    if (std::signbit(fa) == std::signbit(fb)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "find_root: no sign change on [%.6g, %.6g]", a, b);
        throw NoCrossingError(buf);
    }
    std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
    const auto tol = [rel_tol](double x, double y) { return std::abs(x - y) <= rel_tol * std::min(std::abs(x), std::abs(y)); };
    const auto bracket = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
    const double lo = bracket.first, hi = bracket.second;
    const double flo = std::abs(f(lo)), fhi = std::abs(f(hi));
    RootResult r;
    r.root = flo <= fhi ? lo : hi;
    r.residual = std::min(flo, fhi);
    r.iterations = static_cast<int>(iters);
    if (!tol(lo, hi) && r.residual != 0.0) {
        throw ConvergenceError("find_root: iteration budget exhausted", r.root);
    }
    return r;
}

RootResult find_first_root(const std::function<double(double)>& f, double lo, double hi, double factor,
                           double rel_tol) {
    if (!(lo > 0.0 && hi > lo && factor > 1.0)) throw DomainError("find_first_root: need 0 < lo < hi, factor > 1");
    double a = lo, fa = f(a);
    while (a < hi) {
        const double b = std::min(a * factor, hi);
        const double fb = f(b);
        if (fa == 0.0) return {a, 0.0, 0};
        if (std::signbit(fa) != std::signbit(fb) || fb == 0.0) return find_root(f, a, b, rel_tol);
        a = b;
        fa = fb;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "no sign change in (%.6g, %.6g]", lo, hi);
    throw NoCrossingError(buf);
}

}  // namespace eupmol
