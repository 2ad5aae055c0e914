#include "eupmol/spectra.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "eupmol/errors.hpp"

namespace eupmol {

std::string_view to_string(Family f) { return f == Family::pho ? "pho" : "kratzer"; }

Family family_from_string(std::string_view s) {
    if (iequals(s, "pho")) return Family::pho;
    if (iequals(s, "kratzer")) return Family::kratzer;
    throw NotFoundError("unknown potential family '" + std::string(s) + "' (expected pho or kratzer)");
}

void validate(const DeformationConfig& def) {
    if (!(def.lambda >= 0.0) || !std::isfinite(def.lambda)) {
        throw DomainError("deformation parameter lambda must be finite and >= 0");
    }
    if (def.kappa != -1 && def.kappa != 1) throw DomainError("kappa must be -1 (AdS) or +1 (dS)");
}

void validate(const QuantumNumbers& qn) {
    if (qn.n < 0 || qn.l < 0) {
        throw DomainError("quantum numbers must be non-negative, got n=" + std::to_string(qn.n) +
                          " l=" + std::to_string(qn.l));
    }
}

double pho_potential(double r, const MoleculeParams& mol) {
    if (!(r > 0.0)) throw DomainError("pho_potential: r must be > 0");
    const double re = mol.equilibrium_separation;
    const double t = r / re - re / r;
    return mol.dissociation_energy * t * t;
}

double kratzer_potential(double r, const MoleculeParams& mol) {
    if (!(r > 0.0)) throw DomainError("kratzer_potential: r must be > 0");
    const double t = (r - mol.equilibrium_separation) / r;
    return mol.dissociation_energy * t * t;
}

double potential(Family f, double r, const MoleculeParams& mol) {
    return f == Family::pho ? pho_potential(r, mol) : kratzer_potential(r, mol);
}

namespace {

// 2 m D r_e^2 / hbar^2, shared by both families
double depth_parameter(const MoleculeParams& mol) {
    const double re = mol.equilibrium_separation;
    return 2.0 * mol.mass * mol.dissociation_energy * re * re / (mol.hbar * mol.hbar);
}

}  // namespace

double pho_delta(int l, const MoleculeParams& mol) { return l * (l + 1.0) + depth_parameter(mol); }

double kratzer_delta(int l, const MoleculeParams& mol) {
    return (l + 0.5) * (l + 0.5) + depth_parameter(mol);
}

EnergyTerms pho_energy_terms(const QuantumNumbers& qn, const MoleculeParams& mol, double lambda) {
    validate(qn);
    const double m = mol.mass, D = mol.dissociation_energy, re = mol.equilibrium_separation, hb = mol.hbar;
    const double omega = std::sqrt(2.0 * D / (m * re * re));
    const double L = std::sqrt((qn.l + 0.5) * (qn.l + 0.5) + depth_parameter(mol));
    const double stiff = std::sqrt(1.0 + lambda * lambda * hb * hb * re * re / (8.0 * m * D));
    const double n = qn.n;
    EnergyTerms t;
    t.base = hb * omega * stiff * (2.0 * n + L + 1.0) - 2.0 * D;
    t.kappa_slope = -(hb * hb / m) * ((n + 0.5) * (2.0 * n + 2.0 * L + 1.0) - 0.25);
    return t;
}

EnergyTerms kratzer_energy_terms(const QuantumNumbers& qn, const MoleculeParams& mol) {
    validate(qn);
    const double m = mol.mass, D = mol.dissociation_energy, re = mol.equilibrium_separation, hb = mol.hbar;
    const double delta = kratzer_delta(qn.l, mol);
    const double A = qn.n + 0.5 + std::sqrt(delta);
    EnergyTerms t;
    // printed prefactor 4 m D^2 r_e^2 / (2 hbar^2)
    t.base = -(4.0 * m * D * D * re * re / (2.0 * hb * hb)) / (A * A);
    t.kappa_slope = -(hb * hb / (2.0 * m)) * (A * A - delta - 0.75);
    return t;
}

double pho_energy(const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def) {
    validate(def);
    return pho_energy_terms(qn, mol, def.lambda).value(def);
}

double kratzer_energy(const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def) {
    validate(def);
    return kratzer_energy_terms(qn, mol).value(def);
}

double energy(Family f, const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def) {
    return f == Family::pho ? pho_energy(qn, mol, def) : kratzer_energy(qn, mol, def);
}

double pho_energy_undeformed(const QuantumNumbers& qn, const MoleculeParams& mol) {
    validate(qn);
    const double m = mol.mass, D = mol.dissociation_energy, re = mol.equilibrium_separation;
    const double omega = std::sqrt(2.0 * D / (m * re * re));
    const double L = std::sqrt(qn.l * (qn.l + 1.0) + 0.25 + depth_parameter(mol));
    return mol.hbar * omega * (2.0 * qn.n + L + 1.0) - 2.0 * D;
}

double kratzer_energy_undeformed(const QuantumNumbers& qn, const MoleculeParams& mol) {
    validate(qn);
    const double m = mol.mass, D = mol.dissociation_energy, re = mol.equilibrium_separation;
    const double s = std::sqrt(qn.l * (qn.l + 1.0) + 0.25 + depth_parameter(mol));
    const double A = qn.n + 0.5 + s;
    return -2.0 * m * D * D * re * re / (mol.hbar * mol.hbar * A * A);
}

PhoAuxiliaries pho_auxiliaries(const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def) {
    validate(qn);
    validate(def);
    if (def.lambda == 0.0) {
        throw DomainError("pho_auxiliaries: mu is singular at lambda = 0; use the undeformed branch");
    }
    const double m = mol.mass, D = mol.dissociation_energy, re = mol.equilibrium_separation, hb = mol.hbar;
    PhoAuxiliaries a;
    a.delta = pho_delta(qn.l, mol);
    a.eta = 2.0 * m * D / (hb * hb * re * re);
    a.mu = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * a.eta / (def.lambda * def.lambda)));
    a.L = std::sqrt(a.delta + 0.25);
    a.omega = std::sqrt(2.0 * D / (m * re * re));
    a.mass = m;
    a.hbar = hb;
    a.dissociation_energy = D;
    return a;
}

KratzerAuxiliaries kratzer_auxiliaries(const QuantumNumbers& qn, const MoleculeParams& mol,
                                       const DeformationConfig& def) {
    validate(qn);
    validate(def);
    if (def.lambda == 0.0) {
        throw DomainError("kratzer_auxiliaries: eta and zeta1 are singular at lambda = 0; use the undeformed branch");
    }
    const double m = mol.mass, D = mol.dissociation_energy, re = mol.equilibrium_separation, hb = mol.hbar;
    KratzerAuxiliaries a;
    a.delta = kratzer_delta(qn.l, mol);
    a.A = qn.n + 0.5 + std::sqrt(a.delta);
    a.zeta1 = a.A;
    const double kl = def.kappa_lambda();
    a.eta_prime = 4.0 * m * D * re / (std::sqrt(def.lambda) * hb * hb);
    a.eta = def.kappa > 0 ? std::complex<double>(a.eta_prime, 0.0) : std::complex<double>(0.0, -a.eta_prime);
    a.chi_plus = 1.0 - 2.0 * a.zeta1 + a.eta / a.zeta1;
    a.chi_minus = 1.0 - 2.0 * a.zeta1 - a.eta / a.zeta1;
    const double eta2 = (a.eta * a.eta).real();
    const double d = a.A * a.A - eta2 / (4.0 * a.A * a.A);
    a.discriminant = d * d;
    a.mass = m;
    a.hbar = hb;
    a.kappa_lambda = kl;
    return a;
}

bool is_bound(Family f, const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def) {
    validate(qn);
    validate(def);
    if (def.lambda == 0.0 || def.kappa < 0) return true;
    if (f == Family::kratzer) {
        const auto a = kratzer_auxiliaries(qn, mol, def);
        return 2.0 * a.A * a.A < a.eta_prime;
    }
    const auto a = pho_auxiliaries(qn, mol, def);
    return a.mu > a.L + 1.5 + 2.0 * qn.n;
}

double continuum_threshold(Family f, int l, const MoleculeParams& mol, const DeformationConfig& def) {
    validate(def);
    if (def.lambda == 0.0) return f == Family::kratzer ? 0.0 : std::numeric_limits<double>::infinity();
    if (def.kappa < 0) return std::numeric_limits<double>::infinity();
    // X = r / sqrt(1 + lambda r^2) tends to 1/sqrt(lambda); the kinetic term
    // contributes the hyperbolic-space gap lambda hbar^2 / 2m.
    const double xmax = 1.0 / std::sqrt(def.lambda);
    const double vinf = f == Family::pho ? pho_potential(xmax, mol)
                                         : kratzer_potential(xmax, mol) - mol.dissociation_energy;
    return vinf + def.lambda * mol.hbar * mol.hbar * (l * (l + 1.0) + 1.0) / (2.0 * mol.mass);
}

double momentum_uncertainty_bound(double dx, const DeformationConfig& def, double hbar) {
    if (!(dx > 0.0)) throw DomainError("momentum_uncertainty_bound: Delta X must be > 0");
    const double v = hbar / (2.0 * dx) * (1.0 - def.kappa_lambda() * dx * dx);
    return v > 0.0 ? v : 0.0;
}

}  // namespace eupmol
