#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eupmol/spectra.hpp"

namespace eupmol {

enum class CriticalKind { ionization, inversion };
enum class CriticalMethod { closed_form, root_find };

std::string_view to_string(CriticalKind k);
std::string_view to_string(CriticalMethod m);

struct CriticalPoint {
    QuantumNumbers qn;
    std::string molecule;
    Family family = Family::kratzer;
    CriticalKind kind = CriticalKind::ionization;
    int kappa = -1;
    double lambda_value = 0.0;
    CriticalMethod method = CriticalMethod::root_find;
    // |E| (ionization) or |E_nl - E_00| (inversion) at lambda_value, divided
    // by the size of the energies involved
    double residual = 0.0;
    // the other method's value, NaN when only one was run
    double cross_check = std::numeric_limits<double>::quiet_NaN();
};

constexpr double kDefaultLambdaMax = 10.0;

/// Root of the Kratzer AdS level: 4 m^2 D^2 r_e^2 / (hbar^4 A^2 (A^2 - delta - 3/4)).
CriticalPoint lambda_c_closed(const QuantumNumbers& qn, const MoleculeParams& mol);

/// Same root by bracketing on lambda -> E(lambda) up to lambda_max. kappa = +1
/// is accepted and always throws NoCrossingError (no ionization in dS).
CriticalPoint lambda_c_numeric(const QuantumNumbers& qn, const MoleculeParams& mol, int kappa = -1,
                               double lambda_max = kDefaultLambdaMax);

/// Smallest lambda with E_nl = E_00. Root-found, with the closed form (affine
/// for Kratzer, a square root for PHO) in cross_check.
/// Throws DomainError for (0, 0), NoCrossingError when there is no inversion.
/// AdS gaps only grow with lambda, so the default is dS.
CriticalPoint lambda_f(const QuantumNumbers& qn, const MoleculeParams& mol, Family family, int kappa = 1,
                       double lambda_max = kDefaultLambdaMax);
double lambda_f_closed(const QuantumNumbers& qn, const MoleculeParams& mol, Family family, int kappa = 1);

enum class TableKind { lambda_c, lambda_f_pho, lambda_f_kratzer };
// below_n: l = 0..n-1;  up_to_n: l = 0..n
enum class LRule { below_n, up_to_n };

std::string_view to_string(TableKind k);
TableKind table_kind_from_string(std::string_view s);

struct TableOptions {
    int n_min = 1;
    int n_max = 5;
    LRule l_rule = LRule::below_n;
    int kappa = -1;
    double lambda_max = kDefaultLambdaMax;
};

/// Layouts of the reference tables: lambda_c and PHO lambda_f have n = 1..5,
/// l < n in AdS; Kratzer lambda_f has n = 0..5, l <= n. lambda_f tables use dS.
TableOptions default_table_options(TableKind kind);

struct TableCell {
    std::optional<CriticalPoint> point;
    std::string reason;  // "undefined", "no-crossing" or "no-inversion" when empty
};

struct CriticalTable {
    TableKind kind = TableKind::lambda_c;
    TableOptions options;
    std::vector<std::string> molecules;
    std::vector<QuantumNumbers> rows;
    std::vector<std::vector<TableCell>> cells;  // [row][molecule]
};

std::vector<QuantumNumbers> table_rows(int n_min, int n_max, LRule rule);

/// Cells are computed in parallel; layout is n outer, l inner.
CriticalTable generate_table(TableKind kind, const std::vector<MoleculeParams>& molecules,
                             const TableOptions& opt);

}  // namespace eupmol
