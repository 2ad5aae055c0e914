#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eupmol/criticality.hpp"

namespace eupmol {

// Reference critical-point tables, N2 / H2 / CO columns.
// Reference data for the discrepancy report only.
struct PrintedRow {
    QuantumNumbers qn;
    std::vector<std::optional<double>> values;  // one per molecule, empty for blank cells
};

struct PrintedTable {
    TableKind kind = TableKind::lambda_c;
    std::vector<std::string> molecules;
    std::vector<PrintedRow> rows;
};

const PrintedTable& printed_table(TableKind kind);

/// Cells whose printed value breaks the trend of its own column.
bool suspected_misprint(TableKind kind, const QuantumNumbers& qn, const std::string& molecule);

struct Discrepancy {
    QuantumNumbers qn;
    std::string molecule;
    std::optional<double> printed;
    std::optional<double> computed;
    std::string reason;  // computed cell's reason code when empty
    bool misprint = false;

    double ratio() const;         // computed / printed, NaN unless both exist
    double rel_diff() const;      // |computed - printed| / |printed|
};

/// One entry per (row, molecule) present in both tables, printed-table order.
std::vector<Discrepancy> compare_with_printed(const CriticalTable& computed);

struct ReproductionSummary {
    int compared = 0;  // cells with both values, misprints excluded
    int within = 0;
    int excluded = 0;  // flagged misprints
    double fraction() const { return compared ? double(within) / compared : 0.0; }
};

/// Counts cells within rel_tol, optionally restricted to some molecules.
ReproductionSummary summarize(const std::vector<Discrepancy>& d, double rel_tol,
                              const std::vector<std::string>& molecules = {});

}  // namespace eupmol
