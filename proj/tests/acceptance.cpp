// One line per acceptance criterion; exits 1 when any fails. Criteria named
// with --expect-fail still print their verdict but only count if they pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "eupmol/cli.hpp"
#include "eupmol/criticality.hpp"
#include "eupmol/oracle.hpp"
#include "eupmol/polynomials.hpp"
#include "eupmol/reference_tables.hpp"
#include "eupmol/spectra.hpp"
#include "eupmol/wavefunctions.hpp"

using namespace eupmol;

namespace {

constexpr double kUndeformedTol = 1e-10;
constexpr double kUndeformedSeconds = 1.0;
constexpr double kOracleTol = 1e-5;
constexpr double kOracleSeconds = 60.0;
constexpr double kAffinityTol = 1e-12;
constexpr double kCriticalTol = 1e-10;
constexpr double kTableTol = 0.15;
constexpr double kTableFraction = 0.80;
constexpr double kOrthoTol = 1e-8;
constexpr double kPointwiseTol = 1e-4;
constexpr double kUncertaintyTol = 1e-12;
constexpr double kRodriguesTol = 1e-9;
constexpr double kResidueTol = 1e-10;
constexpr double kSymmetryTol = 1e-12;

const MoleculeRegistry& reg() {
    static const auto r = MoleculeRegistry::builtin(units::hartree_amu());
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;
std::set<int> expected_failures;

void report(int id, const char* title, const std::function<Outcome()>& check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const bool expected = expected_failures.count(id) > 0;
    // an expected failure that starts passing is stale and counts
    if (o.pass == expected) ++failures;
    std::printf("[%s] %d %s: %s%s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                expected ? (o.pass ? " (expected to fail)" : " (expected)") : "");
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome undeformed_limit() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::string per;
    for (const auto& mol : reg().all()) {
        double pw = 0.0, kw = 0.0;
        for (int n = 0; n <= 3; ++n)
            for (int l = 0; l <= 2; ++l)
                for (int kappa : {1, -1}) {
                    const DeformationConfig def{1e-12, kappa};
                    const double p0 = pho_energy_undeformed({n, l}, mol);
                    const double k0 = kratzer_energy_undeformed({n, l}, mol);
                    pw = std::max(pw, std::abs(pho_energy({n, l}, mol, def) - p0) / std::abs(p0));
                    kw = std::max(kw, std::abs(kratzer_energy({n, l}, mol, def) - k0) / std::abs(k0));
                }
        per += mol.name + fmt(" pho %.2g kratzer %.2g; ", pw, kw);
        worst = std::max({worst, pw, kw});
    }
    const double t = seconds_since(t0);
    // informational: the same check with electron-mass units
    const auto full = MoleculeRegistry::builtin(units::hartree_full());
    double fw = 0.0;
    for (const auto& mol : full.all())
        for (int n = 0; n <= 3; ++n)
            for (int l = 0; l <= 2; ++l) {
                const double k0 = kratzer_energy_undeformed({n, l}, mol);
                fw = std::max(fw, std::abs(kratzer_energy({n, l}, mol, {1e-12, -1}) - k0) / std::abs(k0));
            }
    return {worst < kUndeformedTol && t < kUndeformedSeconds,
            per + fmt("lambda = 1e-12, n <= 3, l <= 2, %.3g s (hartree-full kratzer: %.2g)", t, fw)};
}

Outcome oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    ValidationGrid g;
    g.molecules = reg().all();
    const auto reps = run_validation(g);
    int levels = 0, failed = 0;
    double worst = 0.0;
    for (const auto& r : reps) {
        if (!r.passes(kOracleTol)) ++failed;
        for (const auto& lv : r.levels) {
            ++levels;
            if (lv.closed_form_bound && lv.oracle_bound) worst = std::max(worst, lv.rel_residual);
        }
    }
    const double t = seconds_since(t0);
    std::ostringstream d;
    d << reps.size() << " spectra / " << levels << " levels, worst residual " << fmt("%.3g", worst) << ", "
      << failed << " failing spectra, " << fmt("%.1f s", t);
    return {failed == 0 && t < kOracleSeconds, d.str()};
}

Outcome kappa_affinity() {
    double worst = 0.0, worst_base = 0.0;
    for (const auto& mol : reg().all())
        for (int i = 1; i <= 100; ++i) {
            const double lam = 1e-4 * std::pow(1e5, (i - 1) / 99.0);  // 1e-4 .. 10
            for (int n = 0; n <= 3; ++n)
                for (int l = 0; l <= 2; ++l) {
                    const QuantumNumbers qn{n, l};
                    const double pb = pho_energy_terms(qn, mol, lam).base;
                    const double kb = kratzer_energy_terms(qn, mol).base;
                    const double ps = pho_energy(qn, mol, {lam, 1}) + pho_energy(qn, mol, {lam, -1}) - 2.0 * pb;
                    const double ks =
                        kratzer_energy(qn, mol, {lam, 1}) + kratzer_energy(qn, mol, {lam, -1}) - 2.0 * kb;
                    // relative to the terms being combined: at large lambda the
                    // kappa parts dwarf the kappa-independent one
                    const double pscale = std::max({std::abs(pho_energy(qn, mol, {lam, 1})),
                                                    std::abs(pho_energy(qn, mol, {lam, -1})), std::abs(pb)});
                    const double kscale = std::max({std::abs(kratzer_energy(qn, mol, {lam, 1})),
                                                    std::abs(kratzer_energy(qn, mol, {lam, -1})), std::abs(kb)});
                    worst = std::max({worst, std::abs(ps) / pscale, std::abs(ks) / kscale});
                    worst_base = std::max({worst_base, std::abs(ps) / std::abs(pb), std::abs(ks) / std::abs(kb)});
                }
        }
    return {worst < kAffinityTol,
            fmt("worst sum %.3g relative to |E|, %.3g relative to the kappa-free part, lambda 1e-4..10", worst,
                worst_base)};
}

Outcome critical_consistency() {
    double worst_c = 0.0, worst_agree = 0.0, worst_f = 0.0;
    int cells = 0, absent = 0;
    const auto mols = reg().all();
    for (auto kind : {TableKind::lambda_c, TableKind::lambda_f_pho, TableKind::lambda_f_kratzer}) {
        const auto t = generate_table(kind, mols, default_table_options(kind));
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            for (std::size_t j = 0; j < mols.size(); ++j) {
                const auto& cell = t.cells[i][j];
                if (!cell.point) {
                    // only the (0, 0) inversion row is structurally empty
                    if (!(kind == TableKind::lambda_f_kratzer && t.rows[i].n == 0)) ++absent;
                    continue;
                }
                ++cells;
                const auto& p = *cell.point;
                if (kind == TableKind::lambda_c) {
                    worst_c = std::max(worst_c, p.residual);
                    worst_agree = std::max(worst_agree, std::abs(p.lambda_value - p.cross_check) / p.cross_check);
                } else {
                    // independent of the stored residual: recompute the gap
                    const Family f = kind == TableKind::lambda_f_pho ? Family::pho : Family::kratzer;
                    const DeformationConfig def{p.lambda_value, p.kappa};
                    const double e00 = energy(f, {0, 0}, mols[j], def);
                    const double gap = energy(f, t.rows[i], mols[j], def) - e00;
                    worst_f = std::max(worst_f, std::abs(gap) / std::abs(e00));
                }
            }
    }
    std::ostringstream d;
    d << cells << " cells, " << absent << " missing; |E(lambda_c)| " << fmt("%.3g", worst_c) << ", closed vs numeric "
      << fmt("%.3g", worst_agree) << ", inversion gap " << fmt("%.3g", worst_f);
    return {absent == 0 && worst_c < kCriticalTol && worst_agree < kCriticalTol && worst_f < kCriticalTol, d.str()};
}

Outcome table_reproduction() {
    const auto t = generate_table(TableKind::lambda_c, reg().all(), default_table_options(TableKind::lambda_c));
    const auto s = summarize(compare_with_printed(t), kTableTol, {"N2", "CO"});
    std::ostringstream d;
    d << "N2/CO lambda_c within 15%: " << s.within << "/" << s.compared << " (" << s.excluded
      << " suspected misprints excluded)";
    return {s.compared > 0 && s.fraction() >= kTableFraction, d.str()};
}

Outcome figure_behaviour() {
    int crossings = 0, ds_crossings = 0, inversions = 0, pho_checked = 0;
    bool ok = true;
    for (const auto& mol : reg().all()) {
        for (int n = 0; n <= 5; ++n) {
            const QuantumNumbers qn{n, 0};
            const double lc = lambda_c_numeric(qn, mol).lambda_value;
            const bool crosses = kratzer_energy(qn, mol, {0.999 * lc, -1}) < 0.0 &&
                                 kratzer_energy(qn, mol, {1.001 * lc, -1}) > 0.0;
            crossings += crosses;
            ok = ok && crosses;
            for (int i = 0; i <= 2000; ++i) {
                const double lam = 10.0 * i / 2000.0;
                if (kratzer_energy(qn, mol, {lam, 1}) >= 0.0) {
                    ++ds_crossings;
                    break;
                }
            }
        }
        // PHO: some excited s-level drops below the ground level past its lambda_f
        bool any = false;
        for (int n = 1; n <= 5; ++n) {
            const auto p = lambda_f({n, 0}, mol, Family::pho);
            const DeformationConfig past{1.05 * p.lambda_value, p.kappa};
            any = any || pho_energy({n, 0}, mol, past) < pho_energy({0, 0}, mol, past);
        }
        ++pho_checked;
        inversions += any;
    }
    std::ostringstream d;
    d << "AdS Kratzer s-states crossing zero at lambda_c: " << crossings << "/18; dS crossings up to 10: "
      << ds_crossings << "; PHO molecules with an inversion past lambda_f: " << inversions << "/" << pho_checked;
    return {ok && ds_crossings == 0 && inversions == pho_checked, d.str()};
}

double pointwise(Family f, const MoleculeParams& mol, const DeformationConfig& def, int n, int l) {
    RadialOperatorSpec spec;
    spec.family = f;
    spec.mol = mol;
    spec.def = def;
    spec.l = l;
    spec.grid = auto_grid(spec, n + 1, AdsClosure::continued, 8000);
    const auto st = solve_state(spec, n);
    const auto sol = normalize(make_solution(f, {n, l}, mol, def, WaveDomain::continued));
    // the continued chart covers theta in (0, pi) with theta = 2 atan(e^x)
    const bool angle = spec.grid.chart == Chart::continued_angle;
    Eigen::ArrayXd c(st.r.size());
    for (Eigen::Index i = 0; i < st.r.size(); ++i) {
        const double th = 2.0 * std::atan(std::exp(st.x(i)));
        if (angle) c(i) = th > 0.0 && th < M_PI ? kratzer_radial_angle(sol, th) : 0.0;
        else c(i) = radial(sol, st.r(i));
    }
    const double sign = (c * st.radial.array()).sum() < 0.0 ? -1.0 : 1.0;
    return (sign * c - st.radial.array()).abs().maxCoeff() / c.abs().maxCoeff();
}

Outcome wavefunctions() {
    int states = 0, bad_nodes = 0;
    double worst_overlap = 0.0;
    for (const auto& mol : reg().all())
        for (auto f : {Family::pho, Family::kratzer})
            for (int kappa : {1, -1})
                for (double lam : {1e-3, 1e-2})
                    for (int l = 0; l <= 1; ++l) {
                        std::vector<RadialSolution> s;
                        for (int n = 0; n <= 3; ++n) {
                            auto raw = make_solution(f, {n, l}, mol, {lam, kappa}, WaveDomain::continued);
                            if (!raw.normalizable) break;
                            s.push_back(normalize(raw));
                        }
                        for (std::size_t i = 0; i < s.size(); ++i) {
                            ++states;
                            if (count_nodes(s[i]) != static_cast<int>(i)) ++bad_nodes;
                            for (std::size_t j = i + 1; j < s.size(); ++j)
                                worst_overlap = std::max(worst_overlap, std::abs(overlap(s[i], s[j])));
                        }
                    }
    const auto& co = reg().get("CO");
    const double dev = std::max(pointwise(Family::pho, co, {0.01, -1}, 0, 0),
                                pointwise(Family::kratzer, co, {0.01, -1}, 0, 0));
    // AdS bound at its minimum, sampled around dX = 1/sqrt(lambda)
    double unc = 0.0;
    for (double lam : {1e-3, 0.04, 2.0}) {
        const double edge = 1.0 / std::sqrt(lam);
        double best = INFINITY;
        for (int i = -500; i <= 500; ++i)
            best = std::min(best, momentum_uncertainty_bound(edge * (1.0 + 1e-3 * i), {lam, -1}));
        unc = std::max(unc, std::abs(best - std::sqrt(lam)) / std::sqrt(lam));
    }
    std::ostringstream d;
    d << states << " states, " << bad_nodes << " wrong node counts, worst overlap " << fmt("%.3g", worst_overlap)
      << ", pointwise " << fmt("%.3g", dev) << ", AdS momentum minimum " << fmt("%.3g", unc);
    return {bad_nodes == 0 && worst_overlap < kOrthoTol && dev < kPointwiseTol && unc < kUncertaintyTol, d.str()};
}

double falling(double p, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= p - i;
    return r;
}

double jacobi_rodrigues(int n, double a, double b, double x) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double binom = std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0));
        sum += binom * std::pow(-1.0, k) * falling(a + n, k) * falling(b + n, n - k) * std::pow(1.0 - x, n - k) *
               std::pow(1.0 + x, k);
    }
    return std::pow(-1.0, n) * sum / (std::pow(2.0, n) * std::tgamma(n + 1.0));
}

Outcome polynomial_kernel() {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> par(-0.95, 6.0), arg(-1.5, 1.5);
    double rod = 0.0, sym = 0.0, res = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = trial % 7;
        const double a = par(rng), b = par(rng), x = arg(rng);
        const double ref = jacobi_rodrigues(n, a, b, x);
        rod = std::max(rod, std::abs(jacobi_eval({n, a, b}, x) - ref) / std::max(1.0, std::abs(ref)));
        const double lhs = jacobi_eval({n, a, b}, -x);
        const double rhs = (n % 2 ? -1.0 : 1.0) * jacobi_eval({n, b, a}, x);
        sym = std::max(sym, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    std::uniform_real_distribution<double> alpha(-40.0, 40.0), beta(1.5, 30.0), t(-5.0, 5.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto v = romanovski_complex({trial % 7, alpha(rng), beta(rng)}, t(rng));
        res = std::max(res, std::abs(v.imag()) / std::max(1.0, std::abs(v.real())));
    }
    return {rod < kRodriguesTol && res < kResidueTol && sym < kSymmetryTol,
            fmt("Rodrigues %.3g, Romanovski imaginary residue %.3g, reflection %.3g", rod, res, sym)};
}

Outcome mutation() {
    const auto dir = std::filesystem::temp_directory_path() / "eupmol_acceptance_mutation";
    std::string detail;
    bool ok = true;
    for (const char* which : {"pho", "kratzer"}) {
        std::ostringstream out, err;
        const int code = run_cli({"validate", "--mutate", which, "--out", (dir / which).string()}, out, err);
        ok = ok && code == exit_code::validation_failed;
        detail += std::string(which) + " -> exit " + std::to_string(code) + "; ";
    }
    std::filesystem::remove_all(dir);
    return {ok, detail + "expected exit 1 for both"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> expect;
    app.add_option("--expect-fail", expect, "criterion known to be unattainable (repeatable)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);
    expected_failures.insert(expect.begin(), expect.end());

    report(1, "undeformed limits", undeformed_limit);
    report(2, "oracle equivalence", oracle_equivalence);
    report(3, "kappa affinity", kappa_affinity);
    report(4, "critical-point self-consistency", critical_consistency);
    report(5, "printed lambda_c table", table_reproduction);
    report(6, "figure behaviour", figure_behaviour);
    report(7, "wavefunction properties", wavefunctions);
    report(8, "polynomial kernel", polynomial_kernel);
    report(9, "mutation sensitivity", mutation);
    std::printf("%d unexpected result(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
