#include "eupmol/units.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "eupmol/errors.hpp"

namespace eupmol {

namespace units {

UnitConvention hartree_full() {
    return {1.0 / kHartreeInEv, 1.0 / kBohrInAngstrom, kAmuInElectronMasses, 1.0, "hartree-full"};
}

UnitConvention hartree_amu() {
    return {1.0 / kHartreeInEv, 1.0 / kBohrInAngstrom, 1.0, 1.0, "hartree-amu"};
}

UnitConvention identity() { return {}; }

UnitConvention convention_by_name(std::string_view name) {
    if (iequals(name, "hartree-full")) return hartree_full();
    if (iequals(name, "hartree-amu")) return hartree_amu();
    if (iequals(name, "identity")) return identity();
    throw NotFoundError("unknown unit convention '" + std::string(name) +
                        "' (expected hartree-full, hartree-amu or identity)");
}

}  // namespace units

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

namespace {

void require_positive(double value, const char* field, const std::string& name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream os;
        os << "molecule '" << name << "': " << field << " must be positive and finite, got " << value;
        throw DomainError(os.str());
    }
}

void validate(const UnitConvention& c) {
    if (!(c.energy_scale > 0.0 && c.length_scale > 0.0 && c.mass_scale > 0.0 && c.hbar > 0.0)) {
        throw DomainError("unit convention '" + c.label + "' has a non-positive scale factor");
    }
}

std::string_view trim(std::string_view s) {
    const auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

MoleculeParams to_internal(const LabMolecule& raw, const UnitConvention& convention) {
    validate(convention);
    require_positive(raw.dissociation_energy_ev, "De_eV", raw.name);
    require_positive(raw.equilibrium_separation_angstrom, "re_angstrom", raw.name);
    require_positive(raw.mass_amu, "m_amu", raw.name);
    return {raw.name,
            raw.dissociation_energy_ev * convention.energy_scale,
            raw.equilibrium_separation_angstrom * convention.length_scale,
            raw.mass_amu * convention.mass_scale,
            convention.hbar,
            convention.label};
}

LabMolecule to_lab(const MoleculeParams& params, const UnitConvention& convention) {
    validate(convention);
    return {params.name, params.dissociation_energy / convention.energy_scale,
            params.equilibrium_separation / convention.length_scale,
            params.mass / convention.mass_scale};
}

const std::vector<LabMolecule>& builtin_molecules() {
    static const std::vector<LabMolecule> table = {
        {"N2", 11.9382, 1.0940, 7.00335},
        {"H2", 4.7446, 0.7416, 0.50391},
        {"CO", 10.8451, 1.1283, 6.86059},
    };
    return table;
}

const LabMolecule& find_builtin(std::string_view name) {
    for (const auto& m : builtin_molecules()) {
        if (iequals(m.name, name)) return m;
    }
    throw NotFoundError("unknown molecule '" + std::string(name) + "' (built-in: N2, H2, CO)");
}

std::vector<LabMolecule> parse_molecules(std::string_view text) {
    struct Pending {
        LabMolecule mol;
        int line = 0;
        bool has_de = false, has_re = false, has_m = false;
    };
    std::vector<LabMolecule> out;
    std::optional<Pending> current;

    auto finish = [&]() {
        if (!current) return;
        const auto& p = *current;
        if (!p.has_de || !p.has_re || !p.has_m) {
            const char* missing = !p.has_de ? "De_eV" : (!p.has_re ? "re_angstrom" : "m_amu");
            throw ParseError("section [" + p.mol.name + "] is missing key " + missing, p.line);
        }
        for (const auto& existing : out) {
            if (iequals(existing.name, p.mol.name)) {
                throw ParseError("duplicate molecule [" + p.mol.name + "]", p.line);
            }
        }
        out.push_back(p.mol);
        current.reset();
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
        if (const auto hash = line.find_first_of("#;"); hash != line.npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", line_no);
            finish();
            const auto name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) throw ParseError("empty section name", line_no);
            current = Pending{{std::string(name), 0, 0, 0}, line_no};
            continue;
        }

        const auto eq = line.find('=');
        if (eq == line.npos) throw ParseError("expected 'key = value'", line_no);
        if (!current) throw ParseError("key outside of a [molecule] section", line_no);
        const auto key = trim(line.substr(0, eq));
        const auto value_text = trim(line.substr(eq + 1));
        double value = 0.0;
        const auto [end, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
        if (ec != std::errc() || end != value_text.data() + value_text.size()) {
            throw ParseError("field " + std::string(key) + ": cannot parse number '" +
                                 std::string(value_text) + "'",
                             line_no);
        }
        if (key == "De_eV") {
            current->mol.dissociation_energy_ev = value;
            current->has_de = true;
        } else if (key == "re_angstrom") {
            current->mol.equilibrium_separation_angstrom = value;
            current->has_re = true;
        } else if (key == "m_amu") {
            current->mol.mass_amu = value;
            current->has_m = true;
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", line_no);
        }
    }
    finish();
    return out;
}

std::vector<MoleculeParams> load_molecules(const std::filesystem::path& path,
                                           const UnitConvention& convention) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw NotFoundError("cannot open molecule file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::vector<MoleculeParams> out;
    for (const auto& raw : parse_molecules(buf.str())) out.push_back(to_internal(raw, convention));
    return out;
}

MoleculeRegistry::MoleculeRegistry(std::vector<MoleculeParams> molecules, UnitConvention convention)
    : molecules_(std::move(molecules)), convention_(std::move(convention)) {
    for (std::size_t i = 0; i < molecules_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (iequals(molecules_[i].name, molecules_[j].name)) {
                throw DomainError("duplicate molecule '" + molecules_[i].name + "' in registry");
            }
        }
    }
}

MoleculeRegistry MoleculeRegistry::builtin(const UnitConvention& convention) {
    std::vector<MoleculeParams> v;
    for (const auto& raw : builtin_molecules()) v.push_back(to_internal(raw, convention));
    return MoleculeRegistry(std::move(v), convention);
}

std::optional<MoleculeParams> MoleculeRegistry::find(std::string_view name) const {
    for (const auto& m : molecules_) {
        if (iequals(m.name, name)) return m;
    }
    return std::nullopt;
}

const MoleculeParams& MoleculeRegistry::get(std::string_view name) const {
    for (const auto& m : molecules_) {
        if (iequals(m.name, name)) return m;
    }
    std::string known;
    for (const auto& m : molecules_) known += (known.empty() ? "" : ", ") + m.name;
    throw NotFoundError("unknown molecule '" + std::string(name) + "' (registry: " + known + ")");
}

std::vector<std::string> MoleculeRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& m : molecules_) out.push_back(m.name);
    return out;
}

}  // namespace eupmol
