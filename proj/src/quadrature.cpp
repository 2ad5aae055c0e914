#include "eupmol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "eupmol/errors.hpp"

namespace eupmol {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
    if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate: NaN interval limit");
    if (a == b) return {};
    if (a > b) {
        auto r = integrate(f, b, a, spec);
        r.value = -r.value;
        return r;
    }
    QuadratureResult out;
    try {
        if (spec.rule == QuadratureRule::gauss_kronrod) {
            out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
                f, a, b, spec.max_depth, spec.rel_tol, &out.error, &out.l1);
        } else if (std::isinf(b) && std::isfinite(a)) {
            boost::math::quadrature::exp_sinh<double> rule(spec.max_depth);
            out.value = rule.integrate(f, a, b, spec.rel_tol, &out.error, &out.l1);
        } else if (std::isinf(a) || std::isinf(b)) {
            boost::math::quadrature::tanh_sinh<double> rule(spec.max_depth);
            out.value = rule.integrate(f, a, b, spec.rel_tol, &out.error, &out.l1);
        } else {
            // Boost's finite (a, b) path can round an abscissa onto an endpoint;
            // its native (-1, 1) path cannot. tc is the signed distance to the
            // nearer end, so x is rebuilt from that end to keep resolution there.
            const double half = 0.5 * (b - a);
            const double in_a = std::nextafter(a, b), in_b = std::nextafter(b, a);
            const auto g = [&](double t, double tc) {
                if (tc < 0.0) return f(std::max(a - half * tc, in_a));
                if (tc > 0.0) return f(std::min(b - half * tc, in_b));
                return f(a + half * (1.0 + t));
            };
            boost::math::quadrature::tanh_sinh<double> rule(spec.max_depth);
            out.value = half * rule.integrate(g, -1.0, 1.0, spec.rel_tol, &out.error, &out.l1);
            out.error *= half;
            out.l1 *= half;
        }
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("integrate: ") + e.what(), out.value);
    }
    if (!std::isfinite(out.value)) throw ConvergenceError("integrate: non-finite result", out.value);
    // Boost's error estimates are loose by design; allow a modest factor.
    const double allowed = std::max(spec.abs_tol, 10.0 * spec.rel_tol * out.l1);
    if (out.error > allowed && out.error > 1e-300) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "integrate: error estimate %.3g exceeds tolerance %.3g", out.error,
                      allowed);
        throw ConvergenceError(buf, out.value);
    }
    return out;
}

}  // namespace eupmol
