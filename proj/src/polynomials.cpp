#include "eupmol/polynomials.hpp"

#include <cstdio>

namespace eupmol {

namespace detail {

void throw_degenerate_jacobi(int n, int k, std::string alpha, std::string beta) {
    throw DomainError("jacobi: degenerate recurrence denominator at k=" + std::to_string(k) +
                      " for n=" + std::to_string(n) + ", alpha=" + alpha + ", beta=" + beta);
}

std::string describe(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string describe(std::complex<double> v) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", v.real(), v.imag());
    return buf;
}

}  // namespace detail

double jacobi_eval(const JacobiParams& p, double x) { return jacobi<double>(p.degree, p.alpha, p.beta, x); }

double jacobi_eval_near_one(const JacobiParams& p, double z) {
    const int n = p.degree;
    if (n < 0) throw DomainError("jacobi: degree must be >= 0");
    const double ab = p.alpha + p.beta + n + 1.0;
    double sum = 0.0, zk = 1.0, rising = 1.0, kfact = 1.0;
    for (int k = 0; k <= n; ++k) {
        // (alpha + k + 1)_(n - k) / (n - k)!
        double head = 1.0;
        for (int j = k + 1; j <= n; ++j) head *= (p.alpha + j) / (j - k);
        sum += head * rising / kfact * zk;
        rising *= ab + k;
        kfact *= k + 1.0;
        zk *= z;
    }
    return sum;
}

double jacobi_derivative(const JacobiParams& p, double x) {
    if (p.degree < 0) throw DomainError("jacobi_derivative: degree must be >= 0");
    if (p.degree == 0) return 0.0;
    return 0.5 * (p.degree + p.alpha + p.beta + 1.0) *
           jacobi<double>(p.degree - 1, p.alpha + 1.0, p.beta + 1.0, x);
}

double jacobi_norm_squared(const JacobiParams& p) {
    if (!(p.alpha > -1.0 && p.beta > -1.0)) {
        throw DomainError("jacobi_norm_squared: weight not integrable unless alpha, beta > -1");
    }
    const double n = p.degree, a = p.alpha, b = p.beta;
    // n = 0 with a + b + 1 = 0 would divide by zero in the generic formula
    if (p.degree == 0) {
        return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                        std::lgamma(a + b + 2.0));
    }
    const double log_h = (a + b + 1.0) * std::log(2.0) - std::log(2.0 * n + a + b + 1.0) +
                         std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) -
                         std::lgamma(n + a + b + 1.0) - std::lgamma(n + 1.0);
    return std::exp(log_h);
}

std::complex<double> romanovski_complex(const RomanovskiParams& p, double x) {
    using C = std::complex<double>;
    const C a(1.0 - p.beta, -0.5 * p.alpha);
    const C b(1.0 - p.beta, 0.5 * p.alpha);
    const C v = jacobi<C>(p.degree, a, b, C(0.0, x));
    C phase(1.0, 0.0);
    for (int k = 0; k < p.degree % 4; ++k) phase *= C(0.0, -1.0);
    return phase * v;
}

double romanovski_eval(const RomanovskiParams& p, double x) {
    const auto v = romanovski_complex(p, x);
    if (std::abs(v.imag()) > 1e-10 * std::abs(v.real())) {
        // near a root |re| is tiny, so judge the residue against a nearby value
        const double scale = std::abs(romanovski_complex(p, std::abs(x) + 1.0));
        if (std::abs(v.imag()) > 1e-10 * scale) {
            throw ConsistencyError("romanovski_eval: imaginary residue " + detail::describe(v.imag()) +
                                   " for n=" + std::to_string(p.degree));
        }
    }
    return v.real();
}

double laguerre_eval(const LaguerreParams& p, double x) {
    if (p.degree < 0) throw DomainError("laguerre_eval: degree must be >= 0");
    double l0 = 1.0;
    if (p.degree == 0) return l0;
    double l1 = 1.0 + p.alpha - x;
    for (int k = 1; k < p.degree; ++k) {
        const double l2 = ((2.0 * k + 1.0 + p.alpha - x) * l1 - (k + p.alpha) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

}  // namespace eupmol
