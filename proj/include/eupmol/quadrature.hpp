#pragma once

#include <functional>

namespace eupmol {

enum class QuadratureRule { gauss_kronrod, tanh_sinh };

struct QuadratureSpec {
    QuadratureRule rule = QuadratureRule::gauss_kronrod;
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    unsigned max_depth = 20;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;  // integral of |f|
};

/// Adaptive integral of f over (a, b); either limit may be infinite.
/// Throws ConvergenceError (carrying the best estimate) when the error
/// estimate exceeds max(abs_tol, rel_tol * l1) after the depth budget.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

}  // namespace eupmol
