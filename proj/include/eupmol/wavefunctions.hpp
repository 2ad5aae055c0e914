#pragma once

#include <limits>
#include <variant>

#include "eupmol/polynomials.hpp"
#include "eupmol/quadrature.hpp"
#include "eupmol/spectra.hpp"

namespace eupmol {

// AdS Kratzer states can be evaluated on the physical ball r < 1/sqrt(lambda)
// or on the continued angle theta in (0, pi) where the closed-form levels are
// exact eigenvalues.
enum class WaveDomain { physical, continued };

using PolynomialParams = std::variant<JacobiParams, RomanovskiParams, LaguerreParams>;

struct RadialSolution {
    Family family = Family::pho;
    QuantumNumbers qn;
    DeformationConfig def;
    MoleculeParams mol;
    double energy = 0.0;
    double log_norm = 0.0;  // C_n = exp(log_norm)
    PolynomialParams polynomial;
    WaveDomain domain = WaveDomain::physical;
    double r_min = 0.0;
    double r_max = std::numeric_limits<double>::infinity();
    bool normalizable = true;  // closed-form validity, see is_bound

    double norm_constant() const { return std::exp(log_norm); }
};

/// Unnormalized (C_n = 1) closed-form states.
///  PHO, lambda > 0:  (sqrt(lambda) r)^(L-1/2) (1 + k lambda r^2)^(nu/2) P_n^(L, nu-1/2)(1 + 2 k lambda r^2),
///                    nu = mu in AdS, 1 - mu in dS.
///  Kratzer dS:       (sqrt(lambda) r)^(A-1) exp(-(eta/2A) asinh(sqrt(lambda) r)) P_n^(-A+eta/2A, -A-eta/2A)(s)
///  Kratzer AdS:      (sqrt(lambda) r)^(A-1) exp(-(eta'/2A) asin(sqrt(lambda) r)) R_n^(-eta'/A, A+1)(t)
///                    s = sqrt(1 + lambda r^2)/(sqrt(lambda) r), t = cot(asin(sqrt(lambda) r)).
///                    Only the continued domain makes these orthogonal.
///  lambda = 0:       the usual Laguerre forms.
RadialSolution make_pho_solution(const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def);
RadialSolution make_kratzer_solution(const QuantumNumbers& qn, const MoleculeParams& mol,
                                     const DeformationConfig& def, WaveDomain domain = WaveDomain::physical);
RadialSolution make_solution(Family f, const QuantumNumbers& qn, const MoleculeParams& mol,
                             const DeformationConfig& def, WaveDomain domain = WaveDomain::physical);

double pho_radial(const RadialSolution& sol, double r);
double kratzer_radial(const RadialSolution& sol, double r);
double radial(const RadialSolution& sol, double r);
/// Continued-domain AdS Kratzer state as a function of theta in (0, pi),
/// r = sin(theta)/sqrt(lambda) on the first half.
double kratzer_radial_angle(const RadialSolution& sol, double theta);

/// Integral of R^2 under d(mu) = r^2 dr / sqrt(1 + kappa lambda r^2).
/// Throws NonNormalizableError when the integrand does not decay.
double norm_integral(const RadialSolution& sol, QuadratureRule rule = QuadratureRule::gauss_kronrod);

/// Sets C_n so the norm integral is 1.
RadialSolution normalize(const RadialSolution& sol, QuadratureRule rule = QuadratureRule::gauss_kronrod);

/// <a|b> under the deformed measure; both states must share family, l, lambda,
/// kappa and domain.
double overlap(const RadialSolution& a, const RadialSolution& b, QuadratureRule rule = QuadratureRule::gauss_kronrod);

/// Sign changes of R in the interior of the region carrying the state.
int count_nodes(const RadialSolution& sol);

}  // namespace eupmol
