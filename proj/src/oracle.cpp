#include "eupmol/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eupmol/errors.hpp"
#include "parallel.hpp"

namespace eupmol {

std::string_view to_string(Chart c) {
    switch (c) {
        case Chart::log_radius: return "log_radius";
        case Chart::ads_angle: return "ads_angle";
        case Chart::continued_angle: return "continued_angle";
    }
    return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// amplitude ratio r^(2 sqrt(delta)) at which the origin region is dropped
constexpr double kOriginDecades = 27.631021115928547;  // ln(1e12)

struct Geometry {
    ChartPoint p;
    double inv_position = 0.0;  // 1/X, finite where X is infinite
};

Geometry geometry(Chart chart, double x, const DeformationConfig& def) {
    Geometry g;
    auto& p = g.p;
    const double lam = def.lambda;
    switch (chart) {
        case Chart::log_radius: {
            const double r = std::exp(x);
            const double y2 = 1.0 + def.kappa_lambda() * r * r;
            if (!(y2 > 0.0)) throw DomainError("log_radius chart: r reaches 1/sqrt(lambda)");
            const double y = std::sqrt(y2);
            p.r = r;
            p.position = r / y;
            p.weight = r * r * r / y;
            p.flux = r * y;
            p.centrifugal = y2 / (r * r);
            g.inv_position = y / r;
            break;
        }
        case Chart::ads_angle: {
            // tan(theta) = e^x
            const double s = 1.0 / std::sqrt(1.0 + std::exp(-2.0 * x));
            const double c = 1.0 / std::sqrt(1.0 + std::exp(2.0 * x));
            const double sl = std::sqrt(lam);
            p.r = s / sl;
            p.position = std::exp(x) / sl;
            p.weight = s * s * s * c / (lam * sl);
            p.flux = std::exp(x) / sl;
            p.centrifugal = lam * std::exp(-2.0 * x);
            g.inv_position = sl * std::exp(-x);
            break;
        }
        case Chart::continued_angle: {
            // sin(theta) = sech x, cos(theta) = -tanh x
            const double sech = 1.0 / std::cosh(x);
            const double sl = std::sqrt(lam);
            const double sh = std::sinh(x);
            p.r = sech / sl;
            p.position = sh == 0.0 ? kInf : -1.0 / (sl * sh);
            p.weight = sech * sech * sech / (lam * sl);
            p.flux = sech / sl;
            p.centrifugal = lam * sh * sh;
            g.inv_position = -sl * sh;
            break;
        }
    }
    return g;
}

void require_chart_fits(Chart chart, const DeformationConfig& def) {
    if (chart != Chart::log_radius && !(def.lambda > 0.0 && def.kappa < 0)) {
        throw DomainError(std::string("chart ") + std::string(to_string(chart)) + " requires AdS with lambda > 0");
    }
}

double first_order_potential(const RadialOperatorSpec& spec, double r) {
    const auto& mol = spec.mol;
    const double D = mol.dissociation_energy, re = mol.equilibrium_separation;
    double v = 0.0, dv = 0.0;
    if (spec.custom_potential) {
        const double step = 1e-6 * r;
        v = spec.custom_potential(r);
        dv = (spec.custom_potential(r + step) - spec.custom_potential(r - step)) / (2.0 * step);
    } else if (spec.family == Family::pho) {
        v = pho_potential(r, mol);
        dv = 2.0 * D * (r / re - re / r) * (1.0 / re + re / (r * r));
    } else {
        v = kratzer_potential(r, mol) - D;
        dv = 2.0 * D * (1.0 - re / r) * (re / (r * r));
    }
    return v - 0.5 * spec.def.kappa_lambda() * r * r * r * dv;
}

double potential_at(const RadialOperatorSpec& spec, const Geometry& g) {
    if (spec.coupling == PotentialCoupling::first_order) {
        if (spec.grid.chart == Chart::continued_angle) {
            throw DomainError("first-order potential coupling is not defined on the continued chart");
        }
        return first_order_potential(spec, g.p.r);
    }
    if (spec.custom_potential) return spec.custom_potential(g.p.position);
    const auto& mol = spec.mol;
    const double D = mol.dissociation_energy, re = mol.equilibrium_separation;
    const double q = g.inv_position;
    if (spec.family == Family::pho) {
        const double t = 1.0 / (q * re) - re * q;
        return D * t * t;
    }
    const double t = 1.0 - re * q;
    return D * (t * t - 1.0);
}

}  // namespace

ChartPoint chart_point(Chart chart, double x, const DeformationConfig& def) {
    require_chart_fits(chart, def);
    return geometry(chart, x, def).p;
}

double operator_potential(const RadialOperatorSpec& spec, double x) {
    require_chart_fits(spec.grid.chart, spec.def);
    return potential_at(spec, geometry(spec.grid.chart, x, spec.def));
}

DiscreteOperator build_operator(const RadialOperatorSpec& spec) {
    validate(spec.def);
    if (spec.l < 0) throw DomainError("build_operator: l must be >= 0");
    const auto& g = spec.grid;
    require_chart_fits(g.chart, spec.def);
    if (g.intervals < 200) throw DomainError("build_operator: need at least 200 grid intervals");
    if (!(g.x_max > g.x_min)) throw DomainError("build_operator: grid must be strictly increasing");
    if (g.chart == Chart::log_radius && spec.def.kappa < 0 && spec.def.lambda > 0.0 &&
        !(std::exp(g.x_max) < 1.0 / std::sqrt(spec.def.lambda))) {
        throw DomainError("build_operator: r_max must lie strictly inside the AdS domain r < 1/sqrt(lambda)");
    }

    const int N = g.intervals;
    const int n = N - 1;
    const double h = (g.x_max - g.x_min) / N;
    const double kin = spec.mol.hbar * spec.mol.hbar / (2.0 * spec.mol.mass);
    const double cent = kin * spec.l * (spec.l + 1.0);

    Eigen::VectorXd flux_mid(N);
    for (int i = 0; i < N; ++i) flux_mid(i) = geometry(g.chart, g.x_min + (i + 0.5) * h, spec.def).p.flux;

    DiscreteOperator op;
    op.h = h;
    op.x.resize(n);
    op.r.resize(n);
    op.weight.resize(n);
    op.matrix.diag.resize(n);
    op.matrix.off.resize(n - 1);
    const double inv_h2 = 1.0 / (h * h);
    for (int i = 0; i < n; ++i) {
        const double x = g.x_min + (i + 1) * h;
        const auto geo = geometry(g.chart, x, spec.def);
        op.x(i) = x;
        op.r(i) = geo.p.r;
        op.weight(i) = geo.p.weight;
        op.matrix.diag(i) = kin * inv_h2 * (flux_mid(i) + flux_mid(i + 1)) / geo.p.weight +
                            cent * geo.p.centrifugal + potential_at(spec, geo);
    }
    for (int i = 0; i + 1 < n; ++i) {
        op.matrix.off(i) = -kin * inv_h2 * flux_mid(i + 1) / std::sqrt(op.weight(i) * op.weight(i + 1));
    }
    return op;
}

OracleState solve_state(const RadialOperatorSpec& spec, int level) {
    if (level < 0) throw DomainError("solve_state: level must be >= 0");
    const auto op = build_operator(spec);
    const auto eig = lowest_eigenpairs(op.matrix, level + 1);
    OracleState s;
    s.energy = eig.values(level);
    s.x = op.x;
    s.r = op.r;
    s.radial = eig.vectors.col(level).array() / (op.weight.array() * op.h).sqrt();
    const double peak = s.radial.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < s.radial.size(); ++i) {
        if (std::abs(s.radial(i)) > 1e-3 * peak) {
            if (s.radial(i) < 0.0) s.radial = -s.radial;
            break;
        }
    }
    return s;
}

namespace {

double bound_threshold(const RadialOperatorSpec& spec) {
    if (spec.custom_potential) return kInf;
    return continuum_threshold(spec.family, spec.l, spec.mol, spec.def);
}

}  // namespace

GridSpec auto_grid(const RadialOperatorSpec& base, int levels, AdsClosure closure, int intervals) {
    validate(base.def);
    if (levels < 1) throw DomainError("auto_grid: levels must be >= 1");
    RadialOperatorSpec spec = base;
    const double lam = spec.def.lambda;
    const double re = spec.mol.equilibrium_separation;
    const bool ads = lam > 0.0 && spec.def.kappa < 0;

    GridSpec g;
    double origin = std::log(re);  // chart coordinate of r_e near the origin
    if (!ads) {
        g.chart = Chart::log_radius;
    } else if (spec.family == Family::kratzer && closure == AdsClosure::continued) {
        g.chart = Chart::continued_angle;
        origin = std::log(std::tan(0.5 * std::asin(std::min(std::sqrt(lam) * re, 0.99))));
    } else {
        g.chart = Chart::ads_angle;
        origin = std::log(std::tan(std::asin(std::min(std::sqrt(lam) * re, 0.99))));
    }
    const double cap_hi = g.chart == Chart::log_radius ? origin + 12.0 : origin + 40.0;
    g.x_min = origin - 1.5;
    g.x_max = origin + 1.5;
    g.intervals = 600;

    for (int it = 0; it < 80; ++it) {
        spec.grid = g;
        const auto op = build_operator(spec);
        const int k = std::min<int>(levels, static_cast<int>(op.matrix.size()));
        const auto eig = lowest_eigenpairs(op.matrix, k);
        bool grow_lo = false, grow_hi = false;
        for (int j = 0; j < k; ++j) {
            const auto v = eig.vectors.col(j).cwiseAbs();
            const double peak = v.maxCoeff();
            if (v.head(3).maxCoeff() > 1e-8 * peak) grow_lo = true;
            if (v.tail(3).maxCoeff() > 1e-8 * peak) grow_hi = true;
        }
        if (grow_hi && g.x_max + 1.0 > cap_hi) grow_hi = false;
        if (grow_lo && g.x_min < origin - 60.0) grow_lo = false;
        if (!grow_lo && !grow_hi) break;
        if (grow_lo) g.x_min -= 1.0;
        if (grow_hi) g.x_max += 1.0;
    }

    const double sd = std::sqrt(kratzer_delta(spec.l, spec.mol));
    g.x_min = std::min(g.x_min, origin - kOriginDecades / (2.0 * sd));
    // the state reaches the far side of the continued chart: same power law at theta = pi
    if (g.chart == Chart::continued_angle && g.x_max > 0.0) {
        g.x_max = std::max(g.x_max, -origin + kOriginDecades / (2.0 * sd));
    }
    g.intervals = intervals;
    return g;
}

ClosedForm default_closed_form() {
    return [](Family f, const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def) {
        return energy(f, qn, mol, def);
    };
}

bool EigenReport::passes(double tol) const {
    for (const auto& lv : levels) {
        if (lv.closed_form_bound != lv.oracle_bound) return false;
        if (lv.closed_form_bound && !(lv.rel_residual < tol)) return false;
    }
    return true;
}

EigenReport solve_eigen(const RadialOperatorSpec& spec, int k, const ClosedForm& closed) {
    if (k < 1) throw DomainError("solve_eigen: k must be >= 1");
    EigenReport rep;
    rep.family = spec.family;
    rep.molecule = spec.mol.name;
    rep.def = spec.def;
    rep.l = spec.l;
    rep.grid = spec.grid;

    Eigen::MatrixXd E(k, 3);
    RadialOperatorSpec s = spec;
    DiscreteOperator finest;
    for (int j = 0; j < 3; ++j) {
        s.grid.intervals = spec.grid.intervals << j;
        auto op = build_operator(s);
        E.col(j) = lowest_eigenvalues(op.matrix, k);
        if (j == 2) finest = std::move(op);
    }
    const double thr = bound_threshold(spec);
    const int bound_count = std::isinf(thr) ? k : sturm_count(finest.matrix, thr);

    for (int i = 0; i < k; ++i) {
        LevelComparison lv;
        lv.n = i;
        lv.oracle = (4.0 * E(i, 1) - E(i, 0)) / 3.0;
        const double d01 = E(i, 0) - E(i, 1), d12 = E(i, 1) - E(i, 2);
        const double floor = 1e-12 * std::abs(E(i, 2));
        lv.convergence_order = (std::abs(d01) > floor && std::abs(d12) > floor && d01 / d12 > 0.0)
                                   ? std::log2(d01 / d12)
                                   : std::numeric_limits<double>::quiet_NaN();
        lv.oracle_bound = i < bound_count;
        if (spec.custom_potential) {
            lv.closed_form = std::numeric_limits<double>::quiet_NaN();
            lv.closed_form_bound = lv.oracle_bound;
            lv.rel_residual = std::numeric_limits<double>::quiet_NaN();
        } else {
            const QuantumNumbers qn{i, spec.l};
            lv.closed_form = closed(spec.family, qn, spec.mol, spec.def);
            lv.closed_form_bound = is_bound(spec.family, qn, spec.mol, spec.def);
            lv.rel_residual = std::abs(lv.oracle - lv.closed_form) / std::abs(lv.closed_form);
        }
        rep.levels.push_back(lv);
    }
    return rep;
}

EigenReport compare_spectrum(Family f, const MoleculeParams& mol, const DeformationConfig& def, int n_max, int l,
                             const CompareOptions& opt) {
    if (n_max < 0) throw DomainError("compare_spectrum: n_max must be >= 0");
    RadialOperatorSpec spec;
    spec.family = f;
    spec.mol = mol;
    spec.def = def;
    spec.l = l;
    spec.grid = auto_grid(spec, n_max + 1, opt.closure, opt.intervals);
    return solve_eigen(spec, n_max + 1, opt.closed);
}

std::vector<EigenReport> run_validation(const ValidationGrid& grid, const CompareOptions& opt) {
    struct Task {
        const MoleculeParams* mol;
        Family family;
        DeformationConfig def;
        int l;
    };
    std::vector<Task> tasks;
    for (const auto& mol : grid.molecules)
        for (auto f : grid.families)
            for (int kappa : grid.kappas)
                for (double lam : grid.lambdas)
                    for (int l = 0; l <= grid.l_max; ++l) tasks.push_back({&mol, f, {lam, kappa}, l});

    std::vector<EigenReport> out(tasks.size());
    detail::parallel_for(tasks.size(), [&](std::size_t i) {
        const auto& t = tasks[i];
        out[i] = compare_spectrum(t.family, *t.mol, t.def, grid.n_max, t.l, opt);
    });
    return out;
}

}  // namespace eupmol
