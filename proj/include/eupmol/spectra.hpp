#pragma once

#include <complex>
#include <string_view>

#include "eupmol/units.hpp"

namespace eupmol {

enum class Family { pho, kratzer };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

// kappa = -1 is anti-de Sitter, +1 de Sitter.
struct DeformationConfig {
    double lambda = 0.0;
    int kappa = -1;

    double cosmological_constant() const noexcept { return -3.0 * lambda; }
    double kappa_lambda() const noexcept { return kappa * lambda; }
};

struct QuantumNumbers {
    int n = 0;
    int l = 0;
};

inline bool operator==(const QuantumNumbers& a, const QuantumNumbers& b) {
    return a.n == b.n && a.l == b.l;
}

void validate(const DeformationConfig& def);
void validate(const QuantumNumbers& qn);

double pho_potential(double r, const MoleculeParams& mol);
// Kratzer potential, zero at r_e and D_e at infinity.
double kratzer_potential(double r, const MoleculeParams& mol);
double potential(Family f, double r, const MoleculeParams& mol);

/// E(kappa, lambda) = undeformed-like part + kappa*lambda*slope for Kratzer;
/// for PHO the lambda^2 dependence sits in `base` and only the kappa-linear
/// piece is split off. energy = base + kappa * lambda * kappa_slope.
struct EnergyTerms {
    double base = 0.0;
    double kappa_slope = 0.0;
    double value(const DeformationConfig& def) const { return base + def.kappa_lambda() * kappa_slope; }
};

EnergyTerms pho_energy_terms(const QuantumNumbers& qn, const MoleculeParams& mol, double lambda);
EnergyTerms kratzer_energy_terms(const QuantumNumbers& qn, const MoleculeParams& mol);

double pho_energy(const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def);
// Measured from the dissociation limit (add D_e for the potential's zero).
double kratzer_energy(const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def);
double energy(Family f, const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def);

// Textbook spectra at lambda = 0, coded independently of the deformed forms.
double pho_energy_undeformed(const QuantumNumbers& qn, const MoleculeParams& mol);
double kratzer_energy_undeformed(const QuantumNumbers& qn, const MoleculeParams& mol);

struct PhoAuxiliaries {
    double delta = 0.0;   // l(l+1) + 2 m D r_e^2 / hbar^2
    double eta = 0.0;     // 2 m D / (hbar^2 r_e^2)
    double mu = 0.0;      // + root of mu(mu-1) = eta / lambda^2
    double L = 0.0;       // sqrt(delta + 1/4)
    double omega = 0.0;
    double mass = 0.0, hbar = 1.0, dissociation_energy = 0.0;

    double epsilon(double E) const { return 2.0 * mass * (E + 2.0 * dissociation_energy) / (hbar * hbar); }
};

struct KratzerAuxiliaries {
    double delta = 0.0;   // (l+1/2)^2 + 2 m D r_e^2 / hbar^2
    double A = 0.0;       // n + 1/2 + sqrt(delta)
    double zeta1 = 0.0;   // equals A on the normalizable branch
    // eta^2 = 16 m^2 D^2 r_e^2 / (kappa lambda hbar^4); eta is imaginary in AdS.
    std::complex<double> eta;
    double eta_prime = 0.0;  // 4 m D r_e / (sqrt(lambda) hbar^2)
    std::complex<double> chi_plus, chi_minus;
    double discriminant = 0.0;  // at the closed-form eigenvalue
    double mass = 0.0, hbar = 1.0, kappa_lambda = 0.0;

    double epsilon(double E) const {
        return 2.0 * mass * E / (kappa_lambda * hbar * hbar) - 0.5;
    }
};

// Both throw DomainError for lambda = 0 (mu, zeta1, eta' contain 1/lambda).
PhoAuxiliaries pho_auxiliaries(const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def);
KratzerAuxiliaries kratzer_auxiliaries(const QuantumNumbers& qn, const MoleculeParams& mol,
                                       const DeformationConfig& def);

double pho_delta(int l, const MoleculeParams& mol);
double kratzer_delta(int l, const MoleculeParams& mol);

/// Whether the closed-form level is a normalizable bound state. AdS and
/// lambda = 0 always are; in dS the level must lie below the continuum edge.
bool is_bound(Family f, const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def);

/// Bottom of the continuous spectrum (dS only; +inf otherwise, and 0 for the
/// undeformed Kratzer problem). Same energy reference as `energy`.
double continuum_threshold(Family f, int l, const MoleculeParams& mol, const DeformationConfig& def);

/// Lower bound on Delta P from [X, P] = i hbar (1 - kappa lambda X^2),
/// clamped at zero.
double momentum_uncertainty_bound(double dx, const DeformationConfig& def, double hbar = 1.0);

}  // namespace eupmol
