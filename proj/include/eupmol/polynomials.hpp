#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Core>

#include "eupmol/errors.hpp"

namespace eupmol {

struct JacobiParams {
    int degree = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

struct RomanovskiParams {
    int degree = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

struct LaguerreParams {
    int degree = 0;
    double alpha = 0.0;
};

namespace detail {

template <class T>
double magnitude(const T& v) {
    using std::abs;
    return static_cast<double>(abs(v));
}

[[noreturn]] void throw_degenerate_jacobi(int n, int k, std::string alpha, std::string beta);

std::string describe(double v);
std::string describe(std::complex<double> v);

}  // namespace detail

/// P_n^{(a,b)}(x) by the three-term recurrence. Works for any real or complex
/// scalar; non-classical parameters are fine. Throws DomainError when a
/// recurrence denominator vanishes (e.g. a + b = -k for some k <= n).
template <class Scalar>
Scalar jacobi(int n, const Scalar& a, const Scalar& b, const Scalar& x) {
    if (n < 0) throw DomainError("jacobi: degree must be >= 0");
    if (n == 0) return Scalar(1);
    const Scalar one(1), two(2);
    Scalar p0 = one;
    Scalar p1 = (a + one) + (a + b + two) * (x - one) / two;
    for (int k = 2; k <= n; ++k) {
        const Scalar kk(static_cast<double>(k));
        const Scalar s = two * kk + a + b;
        const Scalar denom = two * kk * (kk + a + b) * (s - two);
        const double scale = 2.0 * k * (k + detail::magnitude(a) + detail::magnitude(b)) *
                             (2.0 * k + detail::magnitude(a) + detail::magnitude(b));
        if (detail::magnitude(denom) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
            detail::throw_degenerate_jacobi(n, k, detail::describe(a), detail::describe(b));
        }
        const Scalar c1 = (s - one) * (s * (s - two) * x + a * a - b * b);
        const Scalar c0 = two * (kk + a - one) * (kk + b - one) * s;
        const Scalar p2 = (c1 * p1 - c0 * p0) / denom;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double jacobi_eval(const JacobiParams& p, double x);
/// P_n^{(a,b)}(1 + 2z) summed as a series in z. Stays accurate near x = 1
/// with large |b|, where the recurrence in x cancels badly.
double jacobi_eval_near_one(const JacobiParams& p, double z);
// d/dx P_n^{(a,b)} = (n + a + b + 1)/2 * P_{n-1}^{(a+1,b+1)}
double jacobi_derivative(const JacobiParams& p, double x);

/// Elementwise evaluation on an Eigen array.
template <class Derived>
Eigen::ArrayXd jacobi_eval(const JacobiParams& p, const Eigen::ArrayBase<Derived>& x) {
    return x.derived().unaryExpr([&p](double v) { return jacobi_eval(p, v); }).eval();
}

/// Squared norm of P_n^{(a,b)} under (1-x)^a (1+x)^b on [-1, 1]; requires a, b > -1.
double jacobi_norm_squared(const JacobiParams& p);

/// R_n^{(a,b)}(x) = (-i)^n P_n^{(1-b-ia/2, 1-b+ia/2)}(ix). Real by construction;
/// throws ConsistencyError if the imaginary residue exceeds 1e-10 relative.
double romanovski_eval(const RomanovskiParams& p, double x);
// Same, also returning the discarded imaginary part.
std::complex<double> romanovski_complex(const RomanovskiParams& p, double x);

/// Generalized Laguerre L_n^{(a)}(x) for real a.
double laguerre_eval(const LaguerreParams& p, double x);

}  // namespace eupmol
