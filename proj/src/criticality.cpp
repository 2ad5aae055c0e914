#include "eupmol/criticality.hpp"

#include <cmath>

#include "eupmol/errors.hpp"
#include "eupmol/root_finding.hpp"
#include "parallel.hpp"

namespace eupmol {

namespace {

// lower end of the geometric bracket scan, relative to lambda_max
constexpr double kScanFloor = 1e-12;
constexpr double kScanFactor = 1.05;

double relative_gap(const QuantumNumbers& qn, const MoleculeParams& mol, Family f, const DeformationConfig& def) {
    const double e = energy(f, qn, mol, def);
    const double e0 = energy(f, {0, 0}, mol, def);
    return std::abs(e - e0) / std::max(std::abs(e), std::abs(e0));
}

void require_excited(const QuantumNumbers& qn) {
    validate(qn);
    if (qn.n == 0 && qn.l == 0) throw DomainError("lambda_f: undefined for the ground state (0, 0)");
}

}  // namespace

std::string_view to_string(CriticalKind k) { return k == CriticalKind::ionization ? "ionization" : "inversion"; }

std::string_view to_string(CriticalMethod m) {
    return m == CriticalMethod::closed_form ? "closed-form" : "root-find";
}

CriticalPoint lambda_c_closed(const QuantumNumbers& qn, const MoleculeParams& mol) {
    validate(qn);
    const double m = mol.mass, D = mol.dissociation_energy, re = mol.equilibrium_separation, hb = mol.hbar;
    const double delta = kratzer_delta(qn.l, mol);
    const double A = qn.n + 0.5 + std::sqrt(delta);
    const double excess = A * A - delta - 0.75;
    if (!(excess > 0.0)) throw NoCrossingError("lambda_c: A^2 - delta - 3/4 <= 0, the level never ionizes");
    CriticalPoint c;
    c.qn = qn;
    c.molecule = mol.name;
    c.family = Family::kratzer;
    c.kind = CriticalKind::ionization;
    c.kappa = -1;
    c.method = CriticalMethod::closed_form;
    c.lambda_value = 4.0 * m * m * D * D * re * re / (std::pow(hb, 4) * A * A * excess);
    const auto t = kratzer_energy_terms(qn, mol);
    c.residual = std::abs(t.value({c.lambda_value, -1})) / std::abs(t.base);
    return c;
}

CriticalPoint lambda_c_numeric(const QuantumNumbers& qn, const MoleculeParams& mol, int kappa, double lambda_max) {
    validate(qn);
    validate(DeformationConfig{lambda_max, kappa});
    const auto t = kratzer_energy_terms(qn, mol);
    const auto f = [&](double lam) { return t.value({lam, kappa}) / std::abs(t.base); };
    RootResult r;
    try {
        r = find_first_root(f, kScanFloor * lambda_max, lambda_max, kScanFactor);
    } catch (const NoCrossingError&) {
        throw NoCrossingError("lambda_c: E(n=" + std::to_string(qn.n) + ", l=" + std::to_string(qn.l) +
                              ") stays negative up to lambda = " + std::to_string(lambda_max));
    }
    CriticalPoint c;
    c.qn = qn;
    c.molecule = mol.name;
    c.family = Family::kratzer;
    c.kind = CriticalKind::ionization;
    c.kappa = kappa;
    c.method = CriticalMethod::root_find;
    c.lambda_value = r.root;
    c.residual = std::abs(f(r.root));
    if (kappa < 0) c.cross_check = lambda_c_closed(qn, mol).lambda_value;
    return c;
}

double lambda_f_closed(const QuantumNumbers& qn, const MoleculeParams& mol, Family family, int kappa) {
    require_excited(qn);
    if (kappa != 1 && kappa != -1) throw DomainError("lambda_f: kappa must be +1 or -1");
    const QuantumNumbers ground{0, 0};
    double lam = std::numeric_limits<double>::quiet_NaN();
    if (family == Family::kratzer) {
        // E = base + kappa lambda slope, so the gap is affine in lambda
        const auto a = kratzer_energy_terms(qn, mol);
        const auto b = kratzer_energy_terms(ground, mol);
        lam = -(a.base - b.base) / (kappa * (a.kappa_slope - b.kappa_slope));
    } else {
        // hbar w sqrt(1 + beta lam^2) dN = kappa lam (hbar^2/m) dF, squared
        const double m = mol.mass, D = mol.dissociation_energy, re = mol.equilibrium_separation, hb = mol.hbar;
        const double omega = std::sqrt(2.0 * D / (m * re * re));
        const double beta = hb * hb * re * re / (8.0 * m * D);
        const auto a = pho_energy_terms(qn, mol, 0.0);
        const auto b = pho_energy_terms(ground, mol, 0.0);
        const double dN = (a.base - b.base) / (hb * omega);
        const double dF = -(a.kappa_slope - b.kappa_slope) * m / (hb * hb);
        const double denom = hb * hb * dF * dF / (m * m) - omega * omega * dN * dN * beta;
        if (kappa * dF * dN > 0.0 && denom > 0.0) lam = omega * dN / std::sqrt(denom);
    }
    if (!(lam > 0.0) || !std::isfinite(lam)) {
        throw NoCrossingError("lambda_f: no inversion of (" + std::to_string(qn.n) + ", " + std::to_string(qn.l) +
                              ") with the ground level");
    }
    return lam;
}

CriticalPoint lambda_f(const QuantumNumbers& qn, const MoleculeParams& mol, Family family, int kappa,
                       double lambda_max) {
    require_excited(qn);
    validate(DeformationConfig{lambda_max, kappa});
    const QuantumNumbers ground{0, 0};
    const double scale = std::abs(energy(family, ground, mol, {0.0, kappa}));
    const auto gap = [&](double lam) {
        const DeformationConfig def{lam, kappa};
        return (energy(family, qn, mol, def) - energy(family, ground, mol, def)) / scale;
    };
    RootResult r;
    try {
        r = find_first_root(gap, kScanFloor * lambda_max, lambda_max, kScanFactor);
    } catch (const NoCrossingError&) {
        throw NoCrossingError("lambda_f: no inversion of (" + std::to_string(qn.n) + ", " + std::to_string(qn.l) +
                              ") with the ground level up to lambda = " + std::to_string(lambda_max));
    }
    CriticalPoint c;
    c.qn = qn;
    c.molecule = mol.name;
    c.family = family;
    c.kind = CriticalKind::inversion;
    c.kappa = kappa;
    c.method = CriticalMethod::root_find;
    c.lambda_value = r.root;
    c.residual = relative_gap(qn, mol, family, {r.root, kappa});
    try {
        c.cross_check = lambda_f_closed(qn, mol, family, kappa);
    } catch (const NoCrossingError&) {
    }
    return c;
}

std::string_view to_string(TableKind k) {
    switch (k) {
        case TableKind::lambda_c: return "lambda_c";
        case TableKind::lambda_f_pho: return "lambda_f_pho";
        case TableKind::lambda_f_kratzer: return "lambda_f_kratzer";
    }
    return "";
}

TableKind table_kind_from_string(std::string_view s) {
    for (auto k : {TableKind::lambda_c, TableKind::lambda_f_pho, TableKind::lambda_f_kratzer}) {
        if (s == to_string(k)) return k;
    }
    throw DomainError("unknown table kind '" + std::string(s) + "' (lambda_c, lambda_f_pho, lambda_f_kratzer)");
}

TableOptions default_table_options(TableKind kind) {
    TableOptions o;
    switch (kind) {
        case TableKind::lambda_c: break;
        case TableKind::lambda_f_pho: o.kappa = 1; break;
        case TableKind::lambda_f_kratzer:
            o.n_min = 0;
            o.l_rule = LRule::up_to_n;
            o.kappa = 1;
            break;
    }
    return o;
}

std::vector<QuantumNumbers> table_rows(int n_min, int n_max, LRule rule) {
    if (n_min < 0 || n_max < n_min) throw DomainError("table_rows: need 0 <= n_min <= n_max");
    std::vector<QuantumNumbers> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const int l_end = rule == LRule::below_n ? n - 1 : n;
        for (int l = 0; l <= l_end; ++l) rows.push_back({n, l});
    }
    return rows;
}

CriticalTable generate_table(TableKind kind, const std::vector<MoleculeParams>& molecules,
                             const TableOptions& opt) {
    CriticalTable t;
    t.kind = kind;
    t.options = opt;
    for (const auto& m : molecules) t.molecules.push_back(m.name);
    t.rows = table_rows(opt.n_min, opt.n_max, opt.l_rule);
    t.cells.assign(t.rows.size(), std::vector<TableCell>(molecules.size()));

    const std::size_t cols = molecules.size();
    detail::parallel_for(t.rows.size() * cols, [&](std::size_t i) {
        const auto& qn = t.rows[i / cols];
        const auto& mol = molecules[i % cols];
        auto& cell = t.cells[i / cols][i % cols];
        try {
            switch (kind) {
                case TableKind::lambda_c: cell.point = lambda_c_numeric(qn, mol, opt.kappa, opt.lambda_max); break;
                case TableKind::lambda_f_pho:
                    cell.point = lambda_f(qn, mol, Family::pho, opt.kappa, opt.lambda_max);
                    break;
                case TableKind::lambda_f_kratzer:
                    cell.point = lambda_f(qn, mol, Family::kratzer, opt.kappa, opt.lambda_max);
                    break;
            }
        } catch (const DomainError&) {
            if (kind == TableKind::lambda_c) throw;
            cell.reason = "undefined";
        } catch (const NoCrossingError&) {
            cell.reason = kind == TableKind::lambda_c ? "no-crossing" : "no-inversion";
        }
    });
    return t;
}

}  // namespace eupmol
