#pragma once

#include <Eigen/Core>

namespace eupmol {

// Symmetric tridiagonal matrix: diag(0..n-1), off(0..n-2).
struct SymTridiagonal {
    Eigen::VectorXd diag;
    Eigen::VectorXd off;

    Eigen::Index size() const noexcept { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count(const SymTridiagonal& t, double x);

/// The k smallest eigenvalues, ascending, by bisection on the Sturm sequence.
/// Intervals are refined to relative precision, not eps * ||T||, which matters
/// on strongly graded grids where the spectrum spans many decades.
Eigen::VectorXd lowest_eigenvalues(const SymTridiagonal& t, int k);

struct TridiagonalEigen {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // unit 2-norm columns
};

/// k lowest eigenpairs; vectors by inverse iteration.
TridiagonalEigen lowest_eigenpairs(const SymTridiagonal& t, int k);

}  // namespace eupmol
