#include "eupmol/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "eupmol/criticality.hpp"
#include "eupmol/errors.hpp"
#include "eupmol/output.hpp"
#include "eupmol/reference_tables.hpp"
#include "eupmol/units.hpp"
#include "eupmol/wavefunctions.hpp"
#include "parallel.hpp"

namespace eupmol {

namespace {

// thrown for bad flag values found after parsing
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string units = "hartree-amu";
    std::string registry_file;
    std::string out_dir = ".";
    std::string format = "csv";
    std::vector<std::string> molecules;
};

struct Resolved {
    UnitConvention conv;
    MoleculeRegistry registry;
    std::vector<MoleculeParams> selected;
    OutputFormat format;
    std::filesystem::path out_dir;
};

Resolved resolve(const Common& c) {
    UnitConvention conv;
    try {
        conv = units::convention_by_name(c.units);
    } catch (const NotFoundError& e) {
        throw UsageError(e.what());
    }
    std::vector<MoleculeParams> mols = MoleculeRegistry::builtin(conv).all();
    if (!c.registry_file.empty()) {
        std::vector<MoleculeParams> extra;
        try {
            extra = load_molecules(c.registry_file, conv);
        } catch (const NotFoundError& e) {
            throw UsageError(e.what());
        } catch (const ParseError& e) {
            throw UsageError(c.registry_file + ": " + e.what());
        }
        for (auto& m : extra) {
            auto it = std::find_if(mols.begin(), mols.end(), [&](const auto& b) { return iequals(b.name, m.name); });
            if (it != mols.end()) {
                *it = m;
            } else {
                mols.push_back(m);
            }
        }
    }
    Resolved r{conv, MoleculeRegistry(std::move(mols), conv), {}, OutputFormat::csv, c.out_dir};
    try {
        r.format = output_format_from_string(c.format);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const bool all = c.molecules.empty() ||
                     std::any_of(c.molecules.begin(), c.molecules.end(), [](const auto& m) { return iequals(m, "all"); });
    if (all) {
        r.selected = r.registry.all();
    } else {
        for (const auto& name : c.molecules) {
            try {
                r.selected.push_back(r.registry.get(name));
            } catch (const NotFoundError& e) {
                throw UsageError(e.what());
            }
        }
    }
    return r;
}

std::vector<int> kappas_from(const std::string& s, bool allow_both) {
    if (s == "ads") return {-1};
    if (s == "ds") return {1};
    if (s == "both" && allow_both) return {1, -1};
    throw UsageError("--kappa must be " + std::string(allow_both ? "ads, ds or both" : "ads or ds"));
}

std::vector<Family> families_from(const std::string& s) {
    if (s == "both") return {Family::pho, Family::kratzer};
    try {
        return {family_from_string(s)};
    } catch (const std::exception&) {
        throw UsageError("--family must be pho, kratzer or both");
    }
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ";") + x;
    return s;
}

std::string selected_names(const Resolved& r) {
    std::vector<std::string> n;
    for (const auto& m : r.selected) n.push_back(m.name);
    return join(n);
}

// canonical key=value text hashed into the output header
class ConfigText {
public:
    explicit ConfigText(std::string command) { text_ = "command=" + std::move(command) + "\n"; }
    ConfigText& add(const std::string& key, const std::string& value) {
        text_ += key + "=" + value + "\n";
        return *this;
    }
    ConfigText& add(const std::string& key, double value) { return add(key, format_double(value)); }
    ConfigText& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
    const std::string& str() const { return text_; }

private:
    std::string text_;
};

OutputMeta meta_for(const Resolved& r, const ConfigText& cfg) {
    std::string text = cfg.str();
    text += "units=" + r.conv.label + "\nmolecules=" + selected_names(r) + "\n";
    for (const auto& m : r.selected) {
        text += m.name + "=" + format_double(m.dissociation_energy) + "," + format_double(m.equilibrium_separation) +
                "," + format_double(m.mass) + "\n";
    }
    return {r.conv.label, text};
}

std::filesystem::path out_file(const Resolved& r, const std::string& stem) {
    return r.out_dir / (stem + std::string(extension(r.format)));
}

void note_written(std::ostream& out, const std::filesystem::path& p) { out << "wrote " << p.string() << '\n'; }

Sweep sweep_arg(const std::string& text) {
    try {
        return parse_sweep(text);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

// ---- spectrum

struct SpectrumArgs {
    std::string family = "both";
    std::string kappa = "both";
    std::optional<double> lambda;
    std::string sweep = "0:0.05:51";
    int n_max = 5;
    int l = 0;
};

int cmd_spectrum(const Common& c, const SpectrumArgs& a, std::ostream& out) {
    const auto r = resolve(c);
    const auto fams = families_from(a.family);
    const auto kappas = kappas_from(a.kappa, true);
    if (a.n_max < 0 || a.l < 0) throw UsageError("--n and --l must be non-negative");
    std::vector<double> lambdas;
    if (a.lambda) {
        if (!(*a.lambda >= 0.0)) throw UsageError("--lambda must be >= 0");
        lambdas = {*a.lambda};
    } else {
        const auto s = sweep_arg(a.sweep);
        if (s.min < 0.0) throw UsageError("--lambda-sweep must start at lambda >= 0");
        lambdas = s.values();
    }

    struct Job {
        const MoleculeParams* mol;
        Family fam;
        DataTable table;
    };
    std::vector<Job> jobs;
    for (const auto& m : r.selected)
        for (auto f : fams) jobs.push_back({&m, f, {{"lambda", "kappa", "n", "E"}, {}}});
    detail::parallel_for(jobs.size(), [&](std::size_t i) {
        auto& j = jobs[i];
        for (double lam : lambdas)
            for (int k : kappas)
                for (int n = 0; n <= a.n_max; ++n) {
                    const double e = energy(j.fam, {n, a.l}, *j.mol, {lam, k});
                    j.table.rows.push_back({lam, static_cast<long long>(k), static_cast<long long>(n), e});
                }
    });
    for (const auto& j : jobs) {
        ConfigText cfg("spectrum");
        cfg.add("molecule", j.mol->name).add("family", std::string(to_string(j.fam))).add("kappa", a.kappa);
        cfg.add("lambdas", a.lambda ? format_double(*a.lambda) : a.sweep).add("n_max", a.n_max).add("l", a.l);
        const auto path = out_file(r, "spectrum_" + std::string(to_string(j.fam)) + "_" + j.mol->name);
        write_table_file(path, j.table, meta_for(r, cfg), r.format);
        note_written(out, path);
    }
    return exit_code::ok;
}

// ---- tables

struct TablesArgs {
    std::string table = "all";
    std::string kappa;
    std::optional<int> n_max;
    double lambda_max = kDefaultLambdaMax;
    double tolerance = 0.15;
};

int cmd_tables(const Common& c, const TablesArgs& a, std::ostream& out) {
    const auto r = resolve(c);
    std::vector<TableKind> kinds;
    if (a.table == "all") {
        kinds = {TableKind::lambda_c, TableKind::lambda_f_pho, TableKind::lambda_f_kratzer};
    } else {
        try {
            kinds = {table_kind_from_string(a.table)};
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    if (!(a.lambda_max > 0.0)) throw UsageError("--lambda-max must be positive");

    for (auto kind : kinds) {
        auto opt = default_table_options(kind);
        if (!a.kappa.empty()) opt.kappa = kappas_from(a.kappa, false).front();
        if (a.n_max) {
            if (*a.n_max < opt.n_min) throw UsageError("--n below the first row of the table");
            opt.n_max = *a.n_max;
        }
        opt.lambda_max = a.lambda_max;
        const auto t = generate_table(kind, r.selected, opt);

        ConfigText cfg("tables");
        cfg.add("table", std::string(to_string(kind))).add("kappa", opt.kappa).add("n_min", opt.n_min);
        cfg.add("n_max", opt.n_max).add("l_rule", opt.l_rule == LRule::below_n ? "below_n" : "up_to_n");
        cfg.add("lambda_max", opt.lambda_max);
        const auto meta = meta_for(r, cfg);
        const std::string stem(to_string(kind));

        DataTable values, reasons{{"n", "l", "molecule", "reason"}, {}};
        values.columns = {"n", "l"};
        for (const auto& m : t.molecules) values.columns.push_back(m);
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            std::vector<Cell> row{static_cast<long long>(t.rows[i].n), static_cast<long long>(t.rows[i].l)};
            for (std::size_t j = 0; j < t.molecules.size(); ++j) {
                const auto& cell = t.cells[i][j];
                if (cell.point) {
                    row.push_back(cell.point->lambda_value);
                } else {
                    row.push_back(std::monostate{});
                    reasons.rows.push_back({static_cast<long long>(t.rows[i].n),
                                            static_cast<long long>(t.rows[i].l), t.molecules[j], cell.reason});
                }
            }
            values.rows.push_back(std::move(row));
        }
        auto path = out_file(r, "table_" + stem);
        write_table_file(path, values, meta, r.format);
        note_written(out, path);
        path = out_file(r, "table_" + stem + "_reasons");
        write_table_file(path, reasons, meta, r.format);
        note_written(out, path);

        const auto disc = compare_with_printed(t);
        DataTable report{{"n", "l", "molecule", "printed", "computed", "ratio", "rel_diff", "suspected_misprint",
                          "reason"},
                         {}};
        const auto opt_cell = [](const std::optional<double>& v) -> Cell {
            return v ? Cell{*v} : Cell{std::monostate{}};
        };
        for (const auto& d : disc) {
            const bool both = d.printed && d.computed;
            report.rows.push_back({static_cast<long long>(d.qn.n), static_cast<long long>(d.qn.l), d.molecule,
                                   opt_cell(d.printed), opt_cell(d.computed),
                                   both ? Cell{d.ratio()} : Cell{std::monostate{}},
                                   both ? Cell{d.rel_diff()} : Cell{std::monostate{}},
                                   static_cast<long long>(d.misprint), d.reason});
        }
        path = out_file(r, "discrepancy_" + stem);
        write_table_file(path, report, meta, r.format);
        note_written(out, path);

        const auto s = summarize(disc, a.tolerance);
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "%s: %zu rows x %zu molecules, kappa=%+d; printed values within %g%%: %d/%d (%d flagged "
                      "misprints excluded)\n",
                      stem.c_str(), t.rows.size(), t.molecules.size(), opt.kappa, 100.0 * a.tolerance, s.within,
                      s.compared, s.excluded);
        out << buf;
    }
    return exit_code::ok;
}

// ---- figures

struct FiguresArgs {
    std::string kind = "uncertainty";
    double lambda = 0.01;
    std::string dx_sweep;
    std::string family = "kratzer";
    std::string kappa = "ads";
    int n_max = 2;
    int l = 0;
    int points = 1000;
    double r_max_factor = 4.0;
};

int figure_uncertainty(const Resolved& r, const FiguresArgs& a, std::ostream& out) {
    if (!(a.lambda > 0.0)) throw UsageError("figures --kind uncertainty needs --lambda > 0");
    const double edge = 1.0 / std::sqrt(a.lambda);
    Sweep s{0.05 * edge, 10.0 * edge, 1000};
    if (!a.dx_sweep.empty()) s = sweep_arg(a.dx_sweep);
    if (!(s.min > 0.0)) throw UsageError("--dx-sweep must start above 0");
    const double hb = r.conv.hbar;
    DataTable t{{"dx", "hup", "eup_ads", "eup_ds"}, {}};
    for (double dx : s.values()) {
        t.rows.push_back({dx, hb / (2.0 * dx), momentum_uncertainty_bound(dx, {a.lambda, -1}, hb),
                          momentum_uncertainty_bound(dx, {a.lambda, 1}, hb)});
    }
    ConfigText cfg("figures");
    cfg.add("kind", a.kind).add("lambda", a.lambda).add("dx", format_double(s.min) + ":" + format_double(s.max) +
                                                               ":" + std::to_string(s.steps));
    const auto path = out_file(r, "uncertainty");
    write_table_file(path, t, OutputMeta{r.conv.label, cfg.str() + "units=" + r.conv.label + "\n"}, r.format);
    note_written(out, path);
    return exit_code::ok;
}

int figure_wavefunction(const Resolved& r, const FiguresArgs& a, std::ostream& out, std::ostream& err) {
    const auto fams = families_from(a.family);
    const int kappa = kappas_from(a.kappa, false).front();
    if (!(a.lambda >= 0.0)) throw UsageError("--lambda must be >= 0");
    if (a.points < 2) throw UsageError("--points must be at least 2");
    if (!(a.r_max_factor > 0.0)) throw UsageError("--r-max must be positive");
    const DeformationConfig def{a.lambda, kappa};
    for (const auto& mol : r.selected) {
        for (auto fam : fams) {
            DataTable t{{"r", "n", "R"}, {}};
            for (int n = 0; n <= a.n_max; ++n) {
                auto sol = make_solution(fam, {n, a.l}, mol, def, WaveDomain::continued);
                if (!sol.normalizable) {
                    err << "skipping " << mol.name << " " << to_string(fam) << " n=" << n
                        << ": not normalizable at this lambda\n";
                    continue;
                }
                sol = normalize(sol);
                double hi = a.r_max_factor * mol.equilibrium_separation;
                if (std::isfinite(sol.r_max)) hi = std::min(hi, sol.r_max * (1.0 - 1e-9));
                for (int i = 1; i <= a.points; ++i) {
                    const double rr = hi * i / a.points;
                    t.rows.push_back({rr, static_cast<long long>(n), radial(sol, rr)});
                }
            }
            ConfigText cfg("figures");
            cfg.add("kind", a.kind).add("molecule", mol.name).add("family", std::string(to_string(fam)));
            cfg.add("kappa", kappa).add("lambda", a.lambda).add("n_max", a.n_max).add("l", a.l);
            cfg.add("points", a.points).add("r_max", a.r_max_factor);
            const auto path = out_file(r, "wavefunction_" + std::string(to_string(fam)) + "_" + mol.name);
            write_table_file(path, t, meta_for(r, cfg), r.format);
            note_written(out, path);
        }
    }
    return exit_code::ok;
}

int cmd_figures(const Common& c, const FiguresArgs& a, std::ostream& out, std::ostream& err) {
    const auto r = resolve(c);
    if (a.kind == "uncertainty") return figure_uncertainty(r, a, out);
    if (a.kind == "wavefunction") return figure_wavefunction(r, a, out, err);
    throw UsageError("--kind must be uncertainty or wavefunction");
}

// ---- validate

struct ValidateArgs {
    double tolerance = 1e-5;
    int intervals = 2000;
    std::string mutate = "none";
};

int cmd_validate(const Common& c, const ValidateArgs& a, std::ostream& out) {
    const auto r = resolve(c);
    if (!(a.tolerance > 0.0)) throw UsageError("--tol must be positive");
    if (a.intervals < 200) throw UsageError("--intervals must be at least 200");
    CompareOptions opt;
    opt.intervals = a.intervals;
    if (a.mutate == "pho") {
        opt.closed = mutated_closed_form(Family::pho);
    } else if (a.mutate == "kratzer") {
        opt.closed = mutated_closed_form(Family::kratzer);
    } else if (a.mutate != "none") {
        throw UsageError("--mutate must be none, pho or kratzer");
    }
    ValidationGrid grid;
    grid.molecules = r.selected;
    const auto reports = run_validation(grid, opt);

    DataTable t{{"molecule", "family", "kappa", "lambda", "l", "n", "closed_form", "oracle", "rel_residual",
                 "convergence_order", "closed_form_bound", "oracle_bound", "pass"},
                {}};
    int failures = 0, levels = 0;
    double worst = 0.0;
    for (const auto& rep : reports) {
        for (const auto& lv : rep.levels) {
            ++levels;
            const bool ok = lv.closed_form_bound == lv.oracle_bound &&
                            (!lv.closed_form_bound || lv.rel_residual < a.tolerance);
            if (!ok) ++failures;
            if (lv.closed_form_bound && lv.oracle_bound) worst = std::max(worst, lv.rel_residual);
            t.rows.push_back({rep.molecule, std::string(to_string(rep.family)),
                              static_cast<long long>(rep.def.kappa), rep.def.lambda, static_cast<long long>(rep.l),
                              static_cast<long long>(lv.n), lv.closed_form, lv.oracle, lv.rel_residual,
                              lv.convergence_order, static_cast<long long>(lv.closed_form_bound),
                              static_cast<long long>(lv.oracle_bound), static_cast<long long>(ok)});
        }
    }
    ConfigText cfg("validate");
    cfg.add("tol", a.tolerance).add("intervals", a.intervals).add("mutate", a.mutate);
    const auto path = out_file(r, "validation");
    write_table_file(path, t, meta_for(r, cfg), r.format);
    note_written(out, path);
    char buf[160];
    std::snprintf(buf, sizeof buf, "validate: %d levels, worst bound residual %.3g, %d failures (tol %g)\n", levels,
                  worst, failures, a.tolerance);
    out << buf;
    return failures ? exit_code::validation_failed : exit_code::ok;
}

// ---- molecules

int cmd_molecules(const Common& c, std::ostream& out) {
    const auto r = resolve(c);
    DataTable t{{"name", "De_eV", "re_angstrom", "m_amu", "De", "re", "m"}, {}};
    for (const auto& m : r.selected) {
        const auto lab = to_lab(m, r.conv);
        t.rows.push_back({m.name, lab.dissociation_energy_ev, lab.equilibrium_separation_angstrom, lab.mass_amu,
                          m.dissociation_energy, m.equilibrium_separation, m.mass});
    }
    write_table(out, t, meta_for(r, ConfigText("molecules")), r.format);
    return exit_code::ok;
}

}  // namespace

std::vector<double> Sweep::values() const {
    std::vector<double> v(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) v[static_cast<std::size_t>(i)] = min + (max - min) * i / (steps - 1);
    v.back() = max;
    return v;
}

Sweep parse_sweep(std::string_view text) {
    const std::string s(text);
    const auto a = s.find(':');
    const auto b = a == std::string::npos ? a : s.find(':', a + 1);
    if (b == std::string::npos) throw DomainError("sweep '" + s + "' is not min:max:steps");
    Sweep w;
    try {
        std::size_t used = 0;
        w.min = std::stod(s.substr(0, a), &used);
        if (used != a) throw std::invalid_argument("min");
        const auto smax = s.substr(a + 1, b - a - 1);
        w.max = std::stod(smax, &used);
        if (used != smax.size()) throw std::invalid_argument("max");
        const auto ssteps = s.substr(b + 1);
        w.steps = std::stoi(ssteps, &used);
        if (used != ssteps.size()) throw std::invalid_argument("steps");
    } catch (const std::logic_error&) {
        throw DomainError("sweep '" + s + "' is not min:max:steps");
    }
    if (!(w.min < w.max)) throw DomainError("sweep '" + s + "' needs min < max");
    if (w.steps < 2) throw DomainError("sweep '" + s + "' needs at least 2 steps");
    return w;
}

ClosedForm mutated_closed_form(Family which, double factor) {
    return [which, factor](Family f, const QuantumNumbers& qn, const MoleculeParams& mol, const DeformationConfig& def) {
        const double e = energy(f, qn, mol, def);
        if (f != which) return e;
        if (f == Family::kratzer) return e + (factor - 1.0) * kratzer_energy_terms(qn, mol).base;
        // first term of the PHO level is base + 2 D
        return e + (factor - 1.0) * (pho_energy_terms(qn, mol, def.lambda).base + 2.0 * mol.dissociation_energy);
    };
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"eupmol"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states of diatomic molecules under EUP-deformed (A)dS quantum mechanics", "eupmol"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(version()));

    Common common;
    app.add_option("--units", common.units, "unit convention: hartree-amu, hartree-full or identity")
        ->capture_default_str();
    app.add_option("--registry", common.registry_file, "extra molecule file (INI sections with De_eV, re_angstrom, m_amu)");
    app.add_option("--out", common.out_dir, "output directory")->capture_default_str();
    app.add_option("--format", common.format, "csv or json")->capture_default_str();
    app.add_option("--molecule", common.molecules, "molecule name, repeatable; default all");

    SpectrumArgs sp;
    auto* spectrum = app.add_subcommand("spectrum", "s-state energies E_n(lambda) for both kappa");
    spectrum->add_option("--family", sp.family, "pho, kratzer or both")->capture_default_str();
    spectrum->add_option("--kappa", sp.kappa, "ads, ds or both")->capture_default_str();
    auto* lam_opt = spectrum->add_option("--lambda", sp.lambda, "single lambda");
    spectrum->add_option("--lambda-sweep", sp.sweep, "min:max:steps")->capture_default_str()->excludes(lam_opt);
    spectrum->add_option("--n", sp.n_max, "highest n")->capture_default_str();
    spectrum->add_option("--l", sp.l, "angular momentum")->capture_default_str();

    TablesArgs tb;
    auto* tables = app.add_subcommand("tables", "critical lambda tables with a comparison to reference values");
    tables->add_option("--table", tb.table, "lambda_c, lambda_f_pho, lambda_f_kratzer or all")->capture_default_str();
    tables->add_option("--kappa", tb.kappa, "ads or ds (default: ads for lambda_c, ds for lambda_f)");
    tables->add_option("--n", tb.n_max, "highest n");
    tables->add_option("--lambda-max", tb.lambda_max, "upper end of the root search")->capture_default_str();
    tables->add_option("--tolerance", tb.tolerance, "relative tolerance for the printed-value summary")
        ->capture_default_str();

    FiguresArgs fg;
    auto* figures = app.add_subcommand("figures", "figure data: uncertainty curves or wavefunctions");
    figures->add_option("--kind", fg.kind, "uncertainty or wavefunction")->capture_default_str();
    figures->add_option("--lambda", fg.lambda, "deformation parameter")->capture_default_str();
    figures->add_option("--dx-sweep", fg.dx_sweep, "min:max:steps for Delta X (uncertainty)");
    figures->add_option("--family", fg.family, "pho, kratzer or both (wavefunction)")->capture_default_str();
    figures->add_option("--kappa", fg.kappa, "ads or ds (wavefunction)")->capture_default_str();
    figures->add_option("--n", fg.n_max, "highest n (wavefunction)")->capture_default_str();
    figures->add_option("--l", fg.l, "angular momentum (wavefunction)")->capture_default_str();
    figures->add_option("--points", fg.points, "radial samples per state")->capture_default_str();
    figures->add_option("--r-max", fg.r_max_factor, "radial range in units of r_e")->capture_default_str();

    ValidateArgs va;
    auto* validate_cmd = app.add_subcommand("validate", "compare closed-form levels with the finite-difference solver");
    validate_cmd->add_option("--tol", va.tolerance, "relative residual threshold")->capture_default_str();
    validate_cmd->add_option("--intervals", va.intervals, "coarsest grid size")->capture_default_str();
    validate_cmd->add_option("--mutate", va.mutate)->group("");

    auto* molecules = app.add_subcommand("molecules", "list the molecule registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (*spectrum) return cmd_spectrum(common, sp, out);
        if (*tables) return cmd_tables(common, tb, out);
        if (*figures) return cmd_figures(common, fg, out, err);
        if (*validate_cmd) return cmd_validate(common, va, out);
        if (*molecules) return cmd_molecules(common, out);
    } catch (const UsageError& e) {
        err << "eupmol: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "eupmol: " << e.what() << '\n';
        return exit_code::computation;
    }
    return exit_code::usage;
}

}  // namespace eupmol
