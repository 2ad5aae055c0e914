#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "eupmol/spectra.hpp"
#include "eupmol/tridiagonal.hpp"

namespace eupmol {

// Coordinate x in which the radial operator is discretized on a uniform grid.
enum class Chart {
    log_radius,       // r = e^x; lambda = 0, dS, or AdS with a wall below 1/sqrt(lambda)
    ads_angle,        // r = sin(theta)/sqrt(lambda), theta = atan(e^x) in (0, pi/2)
    continued_angle,  // theta = 2 atan(e^x) in (0, pi), continued past r = 1/sqrt(lambda)
};

std::string_view to_string(Chart c);

// How the potential enters the deformed equation.
enum class PotentialCoupling {
    exact_position,  // V(X), X = r / sqrt(1 + kappa lambda r^2)
    first_order,     // V(r) - (kappa lambda / 2) r^3 V'(r)
};

// AdS Kratzer: closed-form levels live on the continued chart; `wall` puts a
// Dirichlet condition at r = 1/sqrt(lambda) instead.
enum class AdsClosure { continued, wall };

struct GridSpec {
    Chart chart = Chart::log_radius;
    double x_min = 0.0;
    double x_max = 0.0;
    int intervals = 2000;
};

struct RadialOperatorSpec {
    Family family = Family::pho;
    MoleculeParams mol;
    DeformationConfig def;
    int l = 0;
    GridSpec grid;
    PotentialCoupling coupling = PotentialCoupling::exact_position;
    // Optional V as a function of the position variable; replaces the family
    // potential when set. Energies are then measured from V's own zero.
    std::function<double(double)> custom_potential;
};

// Geometry of a chart at one point.
struct ChartPoint {
    double r = 0.0;         // radial coordinate of the representation (formal past pi/2)
    double position = 0.0;  // X, signed on the continued chart
    double weight = 0.0;    // W = d(mu)/dx, mu the r^2 dr / sqrt(1 + kappa lambda r^2) measure
    double flux = 0.0;      // P, coefficient of the kinetic form
    double centrifugal = 0.0;  // (1 + kappa lambda r^2) / r^2
};

ChartPoint chart_point(Chart chart, double x, const DeformationConfig& def);

/// Potential energy on the energy scale used by `energy()` (Kratzer shifted
/// by -D_e), evaluated at chart coordinate x.
double operator_potential(const RadialOperatorSpec& spec, double x);

struct DiscreteOperator {
    SymTridiagonal matrix;
    Eigen::VectorXd x;       // interior nodes
    Eigen::VectorXd r;
    Eigen::VectorXd weight;  // W at the nodes
    double h = 0.0;
};

/// Symmetric tridiagonal matrix of the radial Hamiltonian with Dirichlet ends.
/// Symmetrized by the similarity u = sqrt(W h) R.
DiscreteOperator build_operator(const RadialOperatorSpec& spec);

struct OracleState {
    double energy = 0.0;
    Eigen::VectorXd x, r, radial;  // radial normalized under the measure
};

/// Level `level` (0-based) of the discretized operator with its eigenvector
/// mapped back to R(r).
OracleState solve_state(const RadialOperatorSpec& spec, int level);

/// Chooses chart and cutoffs: origin cutoff from the indicial exponent,
/// outer cutoff by expanding until bound eigenvector tails drop below 1e-8.
GridSpec auto_grid(const RadialOperatorSpec& spec, int levels, AdsClosure closure = AdsClosure::continued,
                   int intervals = 2000);

using ClosedForm =
    std::function<double(Family, const QuantumNumbers&, const MoleculeParams&, const DeformationConfig&)>;

struct LevelComparison {
    int n = 0;
    double closed_form = 0.0;
    double oracle = 0.0;  // Richardson extrapolated over (N, 2N)
    double rel_residual = 0.0;
    double convergence_order = 0.0;  // from (N, 2N, 4N); NaN when below roundoff
    bool closed_form_bound = true;
    bool oracle_bound = true;  // level lies below the continuum edge on the finest grid
};

struct EigenReport {
    Family family = Family::pho;
    std::string molecule;
    DeformationConfig def;
    int l = 0;
    GridSpec grid;
    std::vector<LevelComparison> levels;

    // every bound level within tol, and bound/unbound verdicts agree
    bool passes(double tol) const;
};

ClosedForm default_closed_form();

/// k lowest levels of spec (grid taken as given) compared with the closed form.
EigenReport solve_eigen(const RadialOperatorSpec& spec, int k, const ClosedForm& closed = default_closed_form());

struct CompareOptions {
    AdsClosure closure = AdsClosure::continued;
    int intervals = 2000;
    ClosedForm closed = default_closed_form();
};

EigenReport compare_spectrum(Family f, const MoleculeParams& mol, const DeformationConfig& def, int n_max, int l,
                             const CompareOptions& opt = {});

struct ValidationGrid {
    std::vector<MoleculeParams> molecules;
    std::vector<Family> families{Family::pho, Family::kratzer};
    std::vector<int> kappas{1, -1};
    std::vector<double> lambdas{0.0, 1e-3, 1e-2};
    int n_max = 3;
    int l_max = 2;
};

/// One report per (molecule, family, kappa, lambda, l), in that nesting
/// order. Solves run in parallel; order of the result is deterministic.
std::vector<EigenReport> run_validation(const ValidationGrid& grid, const CompareOptions& opt = {});

}  // namespace eupmol
