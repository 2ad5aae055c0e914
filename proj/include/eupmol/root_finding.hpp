#pragma once

#include <functional>

namespace eupmol {

struct RootResult {
    double root = 0.0;
    double residual = 0.0;  // |f(root)|
    int iterations = 0;
};

/// Bracketed derivative-free root of f on [a, b] (TOMS748). f(a), f(b) must
/// differ in sign; interval shrinks to rel_tol relative width.
RootResult find_root(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-14,
                     int max_iter = 200);

/// Smallest root in (lo, hi]: scans geometrically from lo by `factor` until
/// the first sign change, then refines. Throws NoCrossingError if f keeps
/// its sign on the whole scan.
RootResult find_first_root(const std::function<double(double)>& f, double lo, double hi,
                           double factor = 1.1, double rel_tol = 1e-14);

}  // namespace eupmol
