#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eupmol {

/// Multiplicative factors taking laboratory units (eV, angstrom, amu) to the
/// internal working system, plus the value of hbar in that system.
struct UnitConvention {
    double energy_scale = 1.0;
    double length_scale = 1.0;
    double mass_scale = 1.0;
    double hbar = 1.0;
    std::string label = "identity";
};

namespace units {

inline constexpr double kHartreeInEv = 27.211386;
inline constexpr double kBohrInAngstrom = 0.529177;
inline constexpr double kAmuInElectronMasses = 1822.888;

/// Hartree energy and bohr length; mass converted to electron masses.
UnitConvention hartree_full();
/// Hartree energy and bohr length; mass left in amu. Reproduces the order of
/// magnitude of the reference critical-parameter tables.
UnitConvention hartree_amu();
UnitConvention identity();

/// Looks up "hartree-full", "hartree-amu" or "identity".
UnitConvention convention_by_name(std::string_view name);

}  // namespace units

/// Molecule parameters as tabulated in the laboratory: eV, angstrom, amu.
struct LabMolecule {
    std::string name;
    double dissociation_energy_ev = 0.0;
    double equilibrium_separation_angstrom = 0.0;
    double mass_amu = 0.0;
};

/// Molecule parameters in internal units. Invariant: all three physical
/// quantities are strictly positive.
struct MoleculeParams {
    std::string name;
    double dissociation_energy = 0.0;
    double equilibrium_separation = 0.0;
    double mass = 0.0;
    double hbar = 1.0;
    std::string units = "identity";
};

MoleculeParams to_internal(const LabMolecule& raw, const UnitConvention& convention);
LabMolecule to_lab(const MoleculeParams& params, const UnitConvention& convention);

/// N2, H2 and CO in laboratory units.
const std::vector<LabMolecule>& builtin_molecules();

/// Case-insensitive lookup among the built-in molecules; throws NotFoundError.
const LabMolecule& find_builtin(std::string_view name);

/// Parses a molecule file:
///
///     # comment
///     [N2]
///     De_eV = 11.9382
///     re_angstrom = 1.0940
///     m_amu = 7.00335
///
/// Each section must define all three keys. Duplicate names (case-insensitive)
/// are rejected.
std::vector<LabMolecule> parse_molecules(std::string_view text);
std::vector<MoleculeParams> load_molecules(const std::filesystem::path& path,
                                           const UnitConvention& convention);

/// Immutable name -> parameters map in a single unit convention.
class MoleculeRegistry {
public:
    MoleculeRegistry(std::vector<MoleculeParams> molecules, UnitConvention convention);

    static MoleculeRegistry builtin(const UnitConvention& convention);

    const MoleculeParams& get(std::string_view name) const;
    std::optional<MoleculeParams> find(std::string_view name) const;
    const std::vector<MoleculeParams>& all() const noexcept { return molecules_; }
    const UnitConvention& convention() const noexcept { return convention_; }
    std::vector<std::string> names() const;

private:
    std::vector<MoleculeParams> molecules_;
    UnitConvention convention_;
};

bool iequals(std::string_view a, std::string_view b);

}  // namespace eupmol
