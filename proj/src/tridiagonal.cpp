#include "eupmol/tridiagonal.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <lapacke.h>

#include "eupmol/errors.hpp"

namespace eupmol {

namespace {

void check_shape(const SymTridiagonal& t, int k) {
    if (t.size() < 1 || t.off.size() != std::max<Eigen::Index>(t.size() - 1, 0)) {
        throw DomainError("tridiagonal: off-diagonal must have size n-1");
    }
    if (k < 1 || k > t.size()) throw DomainError("tridiagonal: requested level count out of range");
}

struct Bisection {
    std::vector<double> w;
    std::vector<lapack_int> iblock, isplit;
    lapack_int found = 0;
};

Bisection bisect(const SymTridiagonal& t, int k) {
    const lapack_int n = static_cast<lapack_int>(t.size());
    Bisection b;
    b.w.resize(n);
    b.iblock.resize(n);
    b.isplit.resize(n);
    lapack_int nsplit = 0;
    // smallest abstol LAPACK accepts: stopping is then purely relative
    const double abstol = 2.0 * LAPACKE_dlamch('S');
    const lapack_int info =
        LAPACKE_dstebz('I', 'E', n, 0.0, 0.0, 1, k, abstol, t.diag.data(), t.off.data(), &b.found, &nsplit,
                       b.w.data(), b.iblock.data(), b.isplit.data());
    if (info != 0 || b.found != k) {
        throw ConvergenceError("tridiagonal bisection failed (dstebz info=" + std::to_string(info) + ")",
                               b.found > 0 ? b.w[0] : std::numeric_limits<double>::quiet_NaN());
    }
    return b;
}

}  // namespace

int sturm_count(const SymTridiagonal& t, double x) {
    const Eigen::Index n = t.size();
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double e2 = i > 0 ? t.off(i - 1) * t.off(i - 1) : 0.0;
        q = t.diag(i) - x - (i > 0 ? e2 / q : 0.0);
        if (std::abs(q) < tiny) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

Eigen::VectorXd lowest_eigenvalues(const SymTridiagonal& t, int k) {
    check_shape(t, k);
    const auto b = bisect(t, k);
    return Eigen::Map<const Eigen::VectorXd>(b.w.data(), k);
}

TridiagonalEigen lowest_eigenpairs(const SymTridiagonal& t, int k) {
    check_shape(t, k);
    auto b = bisect(t, k);
    const lapack_int n = static_cast<lapack_int>(t.size());
    TridiagonalEigen out;
    out.values = Eigen::Map<const Eigen::VectorXd>(b.w.data(), k);
    out.vectors.resize(n, k);
    std::vector<lapack_int> ifail(k);
    const lapack_int info = LAPACKE_dstein(LAPACK_COL_MAJOR, n, t.diag.data(), t.off.data(), k, b.w.data(),
                                           b.iblock.data(), b.isplit.data(), out.vectors.data(), n, ifail.data());
    if (info != 0) {
        throw ConvergenceError("inverse iteration failed (dstein info=" + std::to_string(info) + ")", b.w[0]);
    }
    return out;
}

}  // namespace eupmol
