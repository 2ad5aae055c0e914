#include "eupmol/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "eupmol/errors.hpp"
#include "eupmol/oracle.hpp"

namespace eupmol {

namespace {

struct LogValue {
    double log_abs = -std::numeric_limits<double>::infinity();
    double sign = 0.0;
};

bool is_ads(const DeformationConfig& def) { return def.lambda > 0.0 && def.kappa < 0; }

Chart chart_for(const RadialSolution& sol) {
    if (!is_ads(sol.def)) return Chart::log_radius;
    if (sol.family == Family::kratzer && sol.domain == WaveDomain::continued) return Chart::continued_angle;
    return Chart::ads_angle;
}

double log_sech(double x) {
    const double a = std::abs(x);
    return -(a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0));
}

double polynomial_value(const PolynomialParams& p, double arg) {
    if (const auto* j = std::get_if<JacobiParams>(&p)) return jacobi_eval(*j, arg);
    if (const auto* r = std::get_if<RomanovskiParams>(&p)) return romanovski_eval(*r, arg);
    return laguerre_eval(std::get<LaguerreParams>(p), arg);
}

// Shape parameters recomputed from the quantum numbers on every call; they
// are cheap compared with the polynomial.
LogValue value_in_chart(const RadialSolution& sol, Chart chart, double x) {
    const auto& mol = sol.mol;
    const auto& def = sol.def;
    const double lam = def.lambda;
    const double m = mol.mass, hb = mol.hbar, D = mol.dissociation_energy, re = mol.equilibrium_separation;
    double lp = 0.0, arg = 0.0;
    bool near_one = false;  // PHO Jacobi argument passed as z = (x - 1)/2

    if (sol.family == Family::pho) {
        const double L = std::sqrt(kratzer_delta(sol.qn.l, mol));
        if (lam == 0.0) {
            const double omega = std::sqrt(2.0 * D / (m * re * re));
            const double z = m * omega * std::exp(2.0 * x) / hb;
            lp = (L - 0.5) * (x - std::log(re)) - 0.5 * z;
            arg = z;
        } else {
            const auto aux = pho_auxiliaries(sol.qn, mol, def);
            if (chart == Chart::ads_angle) {
                const double log_s = -0.5 * std::log1p(std::exp(-2.0 * x));
                const double log_c = -0.5 * std::log1p(std::exp(2.0 * x));
                lp = (L - 0.5) * log_s + aux.mu * log_c;
                arg = -1.0 / (1.0 + std::exp(-2.0 * x));  // (-tanh(x) - 1)/2
                near_one = true;
            } else {
                const double nu = def.kappa < 0 ? aux.mu : 1.0 - aux.mu;
                const double u = def.kappa_lambda() * std::exp(2.0 * x);
                lp = (L - 0.5) * (0.5 * std::log(lam) + x) + 0.5 * nu * std::log1p(u);
                arg = u;
                near_one = true;
            }
        }
    } else {
        const double delta = kratzer_delta(sol.qn.l, mol);
        const double A = sol.qn.n + 0.5 + std::sqrt(delta);
        if (lam == 0.0) {
            const double k = 2.0 * m * D * re / (hb * hb * A);
            lp = (std::sqrt(delta) - 0.5) * (x - std::log(re)) - k * std::exp(x);
            arg = 2.0 * k * std::exp(x);
        } else {
            const double eta = 4.0 * m * D * re / (std::sqrt(lam) * hb * hb);
            if (chart == Chart::log_radius) {
                // dS
                const double sr = std::sqrt(lam) * std::exp(x);
                lp = (A - 1.0) * std::log(sr) - eta / (2.0 * A) * std::asinh(sr);
                arg = std::sqrt(1.0 + std::exp(-2.0 * x) / lam);
            } else if (chart == Chart::ads_angle) {
                const double theta = std::atan(std::exp(x));
                lp = (A - 1.0) * (-0.5 * std::log1p(std::exp(-2.0 * x))) - eta / (2.0 * A) * theta;
                arg = std::exp(-x);
            } else {
                const double theta = 2.0 * std::atan(std::exp(x));
                lp = (A - 1.0) * log_sech(x) - eta / (2.0 * A) * theta;
                arg = -std::sinh(x);
            }
        }
    }
    const double p = near_one ? jacobi_eval_near_one(std::get<JacobiParams>(sol.polynomial), arg)
                              : polynomial_value(sol.polynomial, arg);
    LogValue v;
    if (p != 0.0) {
        v.log_abs = sol.log_norm + lp + std::log(std::abs(p));
        v.sign = p > 0.0 ? 1.0 : -1.0;
    }
    return v;
}

double chart_coordinate(const RadialSolution& sol, double r) {
    if (!(r > sol.r_min && r < sol.r_max)) {
        throw DomainError("radial: r outside the domain (0, " + std::to_string(sol.r_max) + ")");
    }
    switch (chart_for(sol)) {
        case Chart::log_radius: return std::log(r);
        case Chart::ads_angle: return std::log(std::tan(std::asin(std::sqrt(sol.def.lambda) * r)));
        case Chart::continued_angle: return std::log(std::tan(0.5 * std::asin(std::sqrt(sol.def.lambda) * r)));
    }
    return 0.0;
}

double evaluate(const RadialSolution& sol, double r) {
    const auto v = value_in_chart(sol, chart_for(sol), chart_coordinate(sol, r));
    return v.sign * std::exp(v.log_abs);
}

double chart_center(const RadialSolution& sol, Chart chart) {
    const double re = sol.mol.equilibrium_separation;
    const double sr = std::min(std::sqrt(sol.def.lambda) * re, 0.99);
    switch (chart) {
        case Chart::log_radius: return std::log(re);
        case Chart::ads_angle: return std::log(std::tan(std::asin(sr)));
        case Chart::continued_angle: return std::log(std::tan(0.5 * std::asin(sr)));
    }
    return 0.0;
}

// log of R^2 W on a uniform scan, and the window holding the state
struct Scan {
    Chart chart;
    double x0 = 0.0, step = 0.0;
    std::vector<double> g;
    std::vector<double> sign;
    double gmax = -std::numeric_limits<double>::infinity();
    int first = 0, last = 0;
    bool open_right = false;  // slow power-law tail, integrate on to infinity
};

constexpr int kScanPoints = 4001;
constexpr double kScanHalfWidth = 60.0;
constexpr double kWindowDrop = 80.0;

Scan scan(const RadialSolution& sol, int points = kScanPoints) {
    if (!sol.normalizable) {
        throw NonNormalizableError("state n=" + std::to_string(sol.qn.n) + " l=" + std::to_string(sol.qn.l) +
                                   " lies above the continuum edge and is not square integrable");
    }
    Scan s;
    s.chart = chart_for(sol);
    const double c = chart_center(sol, s.chart);
    s.x0 = c - kScanHalfWidth;
    s.step = 2.0 * kScanHalfWidth / (points - 1);
    s.g.resize(points);
    s.sign.resize(points);
    for (int i = 0; i < points; ++i) {
        const double x = s.x0 + i * s.step;
        const auto v = value_in_chart(sol, s.chart, x);
        const double w = chart_point(s.chart, x, sol.def).weight;
        s.g[i] = 2.0 * v.log_abs + std::log(w);
        s.sign[i] = v.sign;
        if (std::isfinite(s.g[i])) s.gmax = std::max(s.gmax, s.g[i]);
    }
    if (!std::isfinite(s.gmax)) throw NonNormalizableError("radial function vanishes or overflows everywhere");
    s.first = points - 1;
    s.last = 0;
    for (int i = 0; i < points; ++i) {
        if (s.g[i] > s.gmax - kWindowDrop) {
            s.first = std::min(s.first, i);
            s.last = std::max(s.last, i);
        }
    }
    if (s.chart == Chart::log_radius && s.last == points - 1) {
        const int k = points / 10;
        const double slope = (s.g[points - 1] - s.g[points - 1 - k]) / (k * s.step);
        if (!(slope < -1e-3)) throw NonNormalizableError("norm integral diverges at large r");
        s.open_right = true;
    }
    if (s.first == 0) throw NonNormalizableError("norm integral diverges at the origin");
    return s;
}

double integrate_window(const std::function<double(double)>& f, double a, double b, QuadratureRule rule,
                        bool open_right = false) {
    constexpr int panels = 16;
    QuadratureSpec spec;
    spec.rule = rule;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-14;  // integrands are scaled to peak near 1
    double sum = 0.0;
    const double w = (b - a) / panels;
    for (int p = 0; p < panels; ++p) sum += integrate(f, a + p * w, a + (p + 1) * w, spec).value;
    if (open_right) {
        // r = e^x overflows far out; the integrand is long gone by then
        const auto g = [&](double x) {
            const double v = x < 700.0 ? f(x) : 0.0;
            return std::isfinite(v) ? v : 0.0;
        };
        sum += integrate(g, b, std::numeric_limits<double>::infinity(), spec).value;
    }
    return sum;
}

// log of the norm integral
double log_norm_integral(const RadialSolution& sol, QuadratureRule rule) {
    const auto s = scan(sol);
    const double a = s.x0 + (s.first - 1) * s.step;
    const double b = s.x0 + (s.last + 1) * s.step;
    const auto f = [&](double x) {
        const auto v = value_in_chart(sol, s.chart, x);
        if (v.sign == 0.0) return 0.0;
        return std::exp(2.0 * v.log_abs + std::log(chart_point(s.chart, x, sol.def).weight) - s.gmax);
    };
    return s.gmax + std::log(integrate_window(f, a, b, rule, s.open_right));
}

void require_same_space(const RadialSolution& a, const RadialSolution& b) {
    if (a.family != b.family || a.qn.l != b.qn.l || a.def.lambda != b.def.lambda || a.def.kappa != b.def.kappa ||
        a.domain != b.domain) {
        throw DomainError("overlap: states must share family, l, lambda, kappa and domain");
    }
}

}  // namespace

RadialSolution make_pho_solution(const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def) {
    validate(qn);
    validate(def);
    RadialSolution s;
    s.family = Family::pho;
    s.qn = qn;
    s.def = def;
    s.mol = mol;
    s.energy = pho_energy(qn, mol, def);
    const double L = std::sqrt(kratzer_delta(qn.l, mol));
    if (def.lambda == 0.0) {
        s.polynomial = LaguerreParams{qn.n, L};
    } else {
        const auto aux = pho_auxiliaries(qn, mol, def);
        const double nu = def.kappa < 0 ? aux.mu : 1.0 - aux.mu;
        s.polynomial = JacobiParams{qn.n, L, nu - 0.5};
    }
    if (is_ads(def)) s.r_max = 1.0 / std::sqrt(def.lambda);
    s.normalizable = is_bound(Family::pho, qn, mol, def);
    return s;
}

RadialSolution make_kratzer_solution(const QuantumNumbers& qn, const MoleculeParams& mol,
                                     const DeformationConfig& def, WaveDomain domain) {
    validate(qn);
    validate(def);
    RadialSolution s;
    s.family = Family::kratzer;
    s.qn = qn;
    s.def = def;
    s.mol = mol;
    s.energy = kratzer_energy(qn, mol, def);
    s.domain = is_ads(def) ? domain : WaveDomain::physical;
    const double delta = kratzer_delta(qn.l, mol);
    if (def.lambda == 0.0) {
        s.polynomial = LaguerreParams{qn.n, 2.0 * std::sqrt(delta)};
    } else {
        const auto aux = kratzer_auxiliaries(qn, mol, def);
        const double A = aux.zeta1;
        if (def.kappa > 0) {
            const double e = aux.eta.real() / (2.0 * A);
            s.polynomial = JacobiParams{qn.n, -A + e, -A - e};
        } else {
            s.polynomial = RomanovskiParams{qn.n, -aux.eta_prime / A, A + 1.0};
        }
    }
    if (is_ads(def)) s.r_max = 1.0 / std::sqrt(def.lambda);
    s.normalizable = is_bound(Family::kratzer, qn, mol, def);
    return s;
}

RadialSolution make_solution(Family f, const QuantumNumbers& qn, const MoleculeParams& mol,
                             const DeformationConfig& def, WaveDomain domain) {
    return f == Family::pho ? make_pho_solution(qn, mol, def) : make_kratzer_solution(qn, mol, def, domain);
}

double pho_radial(const RadialSolution& sol, double r) {
    if (sol.family != Family::pho) throw DomainError("pho_radial: solution is not a PHO state");
    return evaluate(sol, r);
}

double kratzer_radial(const RadialSolution& sol, double r) {
    if (sol.family != Family::kratzer) throw DomainError("kratzer_radial: solution is not a Kratzer state");
    return evaluate(sol, r);
}

double radial(const RadialSolution& sol, double r) { return evaluate(sol, r); }

double kratzer_radial_angle(const RadialSolution& sol, double theta) {
    if (sol.family != Family::kratzer || !is_ads(sol.def)) {
        throw DomainError("kratzer_radial_angle: needs an AdS Kratzer state");
    }
    if (!(theta > 0.0 && theta < M_PI)) throw DomainError("kratzer_radial_angle: theta outside (0, pi)");
    const auto v = value_in_chart(sol, Chart::continued_angle, std::log(std::tan(0.5 * theta)));
    return v.sign * std::exp(v.log_abs);
}

double norm_integral(const RadialSolution& sol, QuadratureRule rule) {
    return std::exp(log_norm_integral(sol, rule));
}

RadialSolution normalize(const RadialSolution& sol, QuadratureRule rule) {
    RadialSolution out = sol;
    out.log_norm -= 0.5 * log_norm_integral(sol, rule);
    return out;
}

double overlap(const RadialSolution& a, const RadialSolution& b, QuadratureRule rule) {
    require_same_space(a, b);
    const auto sa = scan(a);
    const auto sb = scan(b);
    const int first = std::min(sa.first, sb.first), last = std::max(sa.last, sb.last);
    const double lo = sa.x0 + (first - 1) * sa.step;
    const double hi = sa.x0 + (last + 1) * sa.step;
    const double shift = 0.5 * (sa.gmax + sb.gmax);
    const Chart chart = sa.chart;
    const auto f = [&](double x) {
        const auto va = value_in_chart(a, chart, x);
        const auto vb = value_in_chart(b, chart, x);
        if (va.sign == 0.0 || vb.sign == 0.0) return 0.0;
        return va.sign * vb.sign *
               std::exp(va.log_abs + vb.log_abs + std::log(chart_point(chart, x, a.def).weight) - shift);
    };
    return std::exp(shift) * integrate_window(f, lo, hi, rule, sa.open_right || sb.open_right);
}

int count_nodes(const RadialSolution& sol) {
    constexpr int points = 40001;
    const auto s = scan(sol, points);
    int nodes = 0;
    double prev = 0.0;
    for (int i = s.first; i <= s.last; ++i) {
        // ignore the far tails where the value is pure roundoff
        if (!(s.g[i] > s.gmax - 60.0)) continue;
        if (prev != 0.0 && s.sign[i] != 0.0 && s.sign[i] != prev) ++nodes;
        if (s.sign[i] != 0.0) prev = s.sign[i];
    }
    return nodes;
}

}  // namespace eupmol
