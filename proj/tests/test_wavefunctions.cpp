#include <cmath>

#include "doctest.h"

#include "eupmol/errors.hpp"
#include "eupmol/oracle.hpp"
#include "eupmol/wavefunctions.hpp"

using namespace eupmol;

namespace {

const MoleculeRegistry& reg() {
    static const auto r = MoleculeRegistry::builtin(units::hartree_amu());
    return r;
}

// largest |closed - oracle| on the oracle nodes over max |closed|
double pointwise_deviation(Family f, const MoleculeParams& mol, const DeformationConfig& def, int n, int l) {
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

}  // namespace

TEST_CASE("normalized states are orthogonal and have n nodes") {
    for (const auto& mol : reg().all())
        for (auto f : {Family::pho, Family::kratzer})
            for (int kappa : {1, -1})
                for (double lam : {0.0, 1e-3, 1e-2}) {
                    const DeformationConfig def{lam, kappa};
                    std::vector<RadialSolution> s;
                    for (int n = 0; n <= 2; ++n) {
                        auto raw = make_solution(f, {n, 1}, mol, def, WaveDomain::continued);
                        if (!raw.normalizable) break;
                        s.push_back(normalize(raw));
                    }
                    CAPTURE(mol.name);
                    CAPTURE(to_string(f));
                    CAPTURE(kappa);
                    CAPTURE(lam);
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        CHECK(count_nodes(s[i]) == static_cast<int>(i));
                        for (std::size_t j = i + 1; j < s.size(); ++j) CHECK(std::abs(overlap(s[i], s[j])) < 1e-8);
                    }
                }
}

TEST_CASE("pointwise agreement with the finite-difference eigenvectors") {
    const auto& co = reg().get("CO");
    CHECK(pointwise_deviation(Family::pho, co, {0.01, -1}, 0, 0) < 1e-4);
    CHECK(pointwise_deviation(Family::pho, co, {0.01, 1}, 1, 0) < 1e-4);
    CHECK(pointwise_deviation(Family::kratzer, co, {0.01, 1}, 1, 0) < 1e-4);
    CHECK(pointwise_deviation(Family::kratzer, co, {0.01, -1}, 2, 0) < 1e-4);
    // H2 goes like r^0.27 at the origin and the oracle's Dirichlet cut there
    // costs about 1% at the first node; not a pointwise test case
}

TEST_CASE("normalization constant pinned by two quadrature rules") {
    // mpmath: 1/sqrt(int sin^2A(t) exp(-eta' t / A) dt / lambda^1.5)
    const auto& h2 = reg().get("H2");
    const DeformationConfig def{0.001, -1};
    const auto phys = make_kratzer_solution({0, 0}, h2, def, WaveDomain::physical);
    const auto cont = make_kratzer_solution({0, 0}, h2, def, WaveDomain::continued);
    for (auto rule : {QuadratureRule::gauss_kronrod, QuadratureRule::tanh_sinh}) {
        CHECK(normalize(phys, rule).norm_constant() == doctest::Approx(0.26068424122308513011).epsilon(1e-10));
        CHECK(normalize(cont, rule).norm_constant() == doctest::Approx(0.26068414231210991867).epsilon(1e-10));
    }
}

TEST_CASE("normalize is idempotent and projective") {
    const auto& n2 = reg().get("N2");
    auto s = normalize(make_pho_solution({2, 1}, n2, {0.01, 1}));
    CHECK(norm_integral(s) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(norm_integral(s, QuadratureRule::tanh_sinh) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(normalize(s).log_norm == doctest::Approx(s.log_norm).epsilon(1e-12));
    auto scaled = s;
    scaled.log_norm += std::log(7.0);
    CHECK(normalize(scaled).log_norm == doctest::Approx(s.log_norm).epsilon(1e-12));
    CHECK(s.norm_constant() > 0.0);
}

TEST_CASE("boundary behaviour") {
    // R ~ r^(L - 1/2) or r^(A - 1) near the origin; for H2 the power is only ~0.27
    for (const auto& mol : reg().all()) {
        const double re = mol.equilibrium_separation;
        for (auto f : {Family::pho, Family::kratzer}) {
            const auto s = normalize(make_solution(f, {1, 0}, mol, {0.001, -1}, WaveDomain::continued));
            double peak = 0.0;
            for (double r = 0.05 * re; r < 5.0 * re; r += 0.05 * re) peak = std::max(peak, std::abs(radial(s, r)));
            const double a = std::abs(radial(s, 1e-6 * re)), b = std::abs(radial(s, 1e-9 * re));
            CHECK(a < 0.05 * peak);
            CHECK(b < a);
            CHECK(b < 0.01 * peak);
        }
    }
    // AdS Kratzer stays finite at the horizon; its argument cot(theta) -> 0 there
    const auto& co = reg().get("CO");
    const auto s = normalize(make_kratzer_solution({1, 0}, co, {0.01, -1}));
    const double edge = 1.0 / std::sqrt(0.01);
    CHECK(std::isfinite(kratzer_radial(s, edge * (1.0 - 1e-12))));
    CHECK_THROWS_AS(kratzer_radial(s, edge * 1.01), DomainError);
    CHECK_THROWS_AS(kratzer_radial(s, -1.0), DomainError);
    CHECK_THROWS_AS(pho_radial(s, 1.0), DomainError);
}

TEST_CASE("ground state AdS Kratzer shape") {
    const auto& co = reg().get("CO");
    const double lam = 0.01;
    const auto s = make_kratzer_solution({0, 2}, co, {lam, -1});
    const auto aux = kratzer_auxiliaries({0, 2}, co, {lam, -1});
    const double A = aux.A;
    const auto shape = [&](double r) {
        const double t = std::sqrt(1.0 - lam * r * r) / (std::sqrt(lam) * r);
        return std::pow(std::sqrt(lam) * r, A - 1.0) * std::exp(aux.eta_prime / (2.0 * A) * std::atan(t));
    };
    const double ratio = kratzer_radial(s, 2.0) / shape(2.0);
    for (double r : {1.0, 3.0, 6.0, 9.5}) CHECK(kratzer_radial(s, r) / shape(r) == doctest::Approx(ratio).epsilon(1e-11));
}

TEST_CASE("small lambda approaches the undeformed Kratzer states") {
    const auto& co = reg().get("CO");
    const double re = co.equilibrium_separation;
    for (int n = 0; n <= 1; ++n) {
        const auto flat = normalize(make_kratzer_solution({n, 0}, co, {0.0, 1}));
        const auto ds = normalize(make_kratzer_solution({n, 0}, co, {1e-10, 1}));
        const auto ads = normalize(make_kratzer_solution({n, 0}, co, {1e-10, -1}));
        double peak = 0.0;
        for (double r = 0.1 * re; r <= 10.0 * re; r += 0.05 * re) peak = std::max(peak, std::abs(radial(flat, r)));
        // overall signs are conventions; align on the whole window
        double sb = 0.0, sc = 0.0;
        for (double r = 0.1 * re; r <= 10.0 * re; r += 0.05 * re) {
            sb += radial(flat, r) * radial(ds, r);
            sc += radial(flat, r) * radial(ads, r);
        }
        for (double r = 0.1 * re; r <= 10.0 * re; r += 0.05 * re) {
            const double a = radial(flat, r);
            const double b = std::copysign(1.0, sb) * radial(ds, r), c = std::copysign(1.0, sc) * radial(ads, r);
            CHECK(std::abs(a - b) < 1e-5 * peak);
            CHECK(std::abs(a - c) < 1e-5 * peak);
            CHECK(std::abs(b - c) < 1e-5 * peak);
        }
    }
}

TEST_CASE("non-normalizable states are refused") {
    const auto s = make_kratzer_solution({1, 0}, reg().get("H2"), {0.01, 1});
    CHECK_FALSE(s.normalizable);
    CHECK_THROWS_AS(normalize(s), NonNormalizableError);
    // the ground state of the same problem decays only as a power of r
    const auto g = make_kratzer_solution({0, 0}, reg().get("H2"), {0.01, 1});
    CHECK(norm_integral(normalize(g), QuadratureRule::tanh_sinh) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("overlap needs a common space") {
    const auto& co = reg().get("CO");
    const auto a = normalize(make_pho_solution({0, 0}, co, {0.01, 1}));
    const auto b = normalize(make_pho_solution({1, 1}, co, {0.01, 1}));
    CHECK_THROWS_AS(overlap(a, b), DomainError);
}
