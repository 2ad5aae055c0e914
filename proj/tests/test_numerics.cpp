#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"

#include "eupmol/errors.hpp"
#include "eupmol/quadrature.hpp"
#include "eupmol/root_finding.hpp"
#include "eupmol/tridiagonal.hpp"

using namespace eupmol;

TEST_CASE("quadrature rules agree on smooth integrands") {
    for (auto rule : {QuadratureRule::gauss_kronrod, QuadratureRule::tanh_sinh}) {
        const QuadratureSpec spec{rule, 1e-13};
        CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, spec).value == doctest::Approx(1.0 / 3.0));
        CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, INFINITY, spec).value ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(integrate([](double x) { return std::exp(-x * x); }, -INFINITY, INFINITY, spec).value ==
              doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
        // reversed limits
        CHECK(integrate([](double x) { return std::cos(x); }, M_PI / 2, 0.0, spec).value ==
              doctest::Approx(-1.0).epsilon(1e-13));
    }
    // endpoint singularity: only the double-exponential rule is expected to cope
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {QuadratureRule::tanh_sinh, 1e-9});
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
}

TEST_CASE("quadrature reports failure") {
    // 1/x on (0, 1] diverges
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, {QuadratureRule::gauss_kronrod, 1e-12}),
                    ConvergenceError);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, NAN, 1.0), DomainError);
}

TEST_CASE("bracketed roots") {
    const auto r = find_root([](double x) { return std::cos(x); }, 0.0, 2.0);
    CHECK(r.root == doctest::Approx(M_PI / 2).epsilon(1e-14));
    CHECK(r.residual < 1e-14);
    CHECK(find_root([](double x) { return x * x * x - 2.0; }, 0.0, 3.0).root ==
          doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoCrossingError);
}

TEST_CASE("first root on a geometric scan") {
    // sin has roots at pi, 2 pi, ...; the smallest above 0.1 is pi
    const auto r = find_first_root([](double x) { return std::sin(x); }, 0.1, 20.0);
    CHECK(r.root == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK_THROWS_AS(find_first_root([](double x) { return 1.0 + x; }, 0.1, 20.0), NoCrossingError);
}

namespace {

SymTridiagonal random_tridiagonal(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    SymTridiagonal t{Eigen::VectorXd(n), Eigen::VectorXd(n - 1)};
    for (int i = 0; i < n; ++i) t.diag(i) = 2.0 + g(rng);
    for (int i = 0; i + 1 < n; ++i) t.off(i) = g(rng);
    return t;
}

}  // namespace

TEST_CASE("tridiagonal eigenvalues against Eigen") {
    const auto t = random_tridiagonal(120, 11);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(t.diag, t.off, Eigen::EigenvaluesOnly);
    const auto mine = lowest_eigenvalues(t, 8);
    REQUIRE(mine.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(mine(i) == doctest::Approx(es.eigenvalues()(i)).epsilon(1e-13));
}

TEST_CASE("tridiagonal eigenvectors") {
    const auto t = random_tridiagonal(60, 5);
    const auto e = lowest_eigenpairs(t, 4);
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(60, 60);
    dense.diagonal() = t.diag;
    dense.diagonal(1) = t.off;
    dense.diagonal(-1) = t.off;
    for (int k = 0; k < 4; ++k) {
        const Eigen::VectorXd v = e.vectors.col(k);
        CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((dense * v - e.values(k) * v).norm() < 1e-11);
    }
    CHECK(std::abs(e.vectors.col(0).dot(e.vectors.col(1))) < 1e-12);
}

TEST_CASE("Sturm count brackets the spectrum") {
    const auto t = random_tridiagonal(40, 2);
    const auto ev = lowest_eigenvalues(t, 40);
    CHECK(sturm_count(t, ev(0) - 1e-9) == 0);
    for (int k = 0; k + 1 < 40; ++k) {
        const double mid = 0.5 * (ev(k) + ev(k + 1));
        if (ev(k + 1) - ev(k) > 1e-10) CHECK(sturm_count(t, mid) == k + 1);
    }
    CHECK(sturm_count(t, ev(39) + 1.0) == 40);
}

TEST_CASE("relative accuracy for widely scaled spectra") {
    // eigenvalues 1e-8 .. 1 on the diagonal of an almost diagonal matrix
    const int n = 30;
    SymTridiagonal t{Eigen::VectorXd(n), Eigen::VectorXd::Constant(n - 1, 1e-14)};
    for (int i = 0; i < n; ++i) t.diag(i) = std::pow(10.0, -8.0 + 8.0 * i / (n - 1));
    const auto ev = lowest_eigenvalues(t, 3);
    CHECK(ev(0) == doctest::Approx(1e-8).epsilon(1e-10));
}
