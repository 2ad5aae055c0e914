#include "eupmol/reference_tables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eupmol/units.hpp"

namespace eupmol {

namespace {

using V = std::optional<double>;

PrintedTable make_lambda_c() {
    PrintedTable t{TableKind::lambda_c, {"N2", "H2", "CO"}, {}};
    t.rows = {
        {{1, 0}, {0.19770, 0.00220, 0.17762}},
        {{2, 0}, {0.08419, 0.00052, 0.07507}},
        {{2, 1}, {0.01529, 0.00023, 0.06919}},
        {{3, 0}, {0.043963, 0.000179, 0.03897}},
        {{3, 1}, {0.04970, 0.000095, 0.03621}},
        {{3, 2}, {0.03599, 0.000052, 0.03164}},
        {{4, 0}, {0.022572, 0.000077, 0.02269}},
        {{4, 1}, {0.02412, 0.000045, 0.02122}},
        {{4, 2}, {0.021423, 0.000027, 0.01876}},
        {{4, 3}, {0.018307, 0.000017, 0.01595}},
        {{5, 0}, {0.016227, 0.000038, 0.01426}},
        {{5, 1}, {0.015294, 0.000024, 0.01341}},
        {{5, 2}, {0.013718, 0.000015, 0.01197}},
        {{5, 3}, {0.011856, 0.000010, 0.01030}},
        {{5, 4}, {0.01007, 7.4e-6, 0.00866}},
    };
    return t;
}

PrintedTable make_lambda_f_pho() {
    PrintedTable t{TableKind::lambda_f_pho, {"N2", "H2", "CO"}, {}};
    t.rows = {
        {{1, 0}, {0.0597119, 0.00162457, 0.0567986}},
        {{2, 0}, {0.0352453, 0.000503812, 0.0332321}},
        {{2, 1}, {0.0379421, 0.000300942, 0.0354058}},
        {{3, 0}, {0.0221267, 0.00020685, 0.0207211}},
        {{3, 1}, {0.0236383, 0.00012418, 0.0219046}},
        {{3, 2}, {0.0254385, 0.00009019, 0.0232438}},
        {{4, 0}, {0.0145841, 0.00010054, 0.0135836}},
        {{4, 1}, {0.0154871, 0.00006065, 0.0142719}},
        {{4, 2}, {0.0165328, 0.0000445466, 0.177242}},
        {{4, 3}, {0.0171201, 0.0000361096, 0.0153659}},
        {{5, 0}, {0.00999948, 0.0000547581, 0.0092722}},
        {{5, 1}, {0.0105673, 0.0000331766, 0.0096943}},
        {{5, 2}, {0.0112105, 0.0000245916, 0.0101414}},
        {{5, 3}, {0.0115529, 0.0000201296, 0.0103248}},
        {{5, 4}, {0.0115344, 0.000017249, 0.0102143}},
    };
    return t;
}

PrintedTable make_lambda_f_kratzer() {
    PrintedTable t{TableKind::lambda_f_kratzer, {"N2", "H2", "CO"}, {}};
    t.rows = {
        {{0, 0}, {V{}, V{}, V{}}},
        {{1, 0}, {0.847672, 0.211971, 0.775011}},
        {{1, 1}, {0.772393, 0.159601, 0.704656}},
        {{2, 0}, {0.489404, 0.122382, 0.447453}},
        {{2, 1}, {0.448771, 0.0936605, 0.40947}},
        {{2, 2}, {0.399568, 0.0821475, 0.364012}},
        {{3, 0}, {0.346061, 0.0865369, 0.316397}},
        {{3, 1}, {0.317836, 0.0665504, 0.290011}},
        {{3, 2}, {0.283484, 0.0584089, 0.25827}},
        {{3, 3}, {0.255954, 0.0543813, 0.233107}},
        {{4, 0}, {0.268058, 0.0670312, 0.24508}},
        {{4, 1}, {0.246352, 0.051601, 0.224788}},
        {{4, 2}, {0.219881, 0.0453442, 0.200328}},
        {{4, 3}, {0.198629, 0.042228, 0.180902}},
        {{4, 4}, {0.183597, 0.0403857, 0.167265}},
        {{5, 0}, {0.218868, 0.0547307, 0.200107}},
        {{5, 1}, {0.20121, 0.0421667, 0.183599}},
        {{5, 2}, {0.179653, 0.0370648, 0.163679}},
        {{5, 3}, {0.16233, 0.0345219, 0.147844}},
        {{5, 4}, {0.1500, 0.0330181, 0.136721}},
        {{5, 5}, {0.141576, 0.0320283, 0.129049}},
    };
    return t;
}

struct Flag {
    TableKind kind;
    QuantumNumbers qn;
    const char* molecule;
};

// N2 (2,1) is 5x below its neighbours; N2 (3,1) and (4,0) make the column
// non-monotonic in l; CO (4,2) is ten times the rest of its column.
constexpr Flag kMisprints[] = {
    {TableKind::lambda_c, {2, 1}, "N2"},
    {TableKind::lambda_c, {3, 1}, "N2"},
    {TableKind::lambda_c, {4, 0}, "N2"},
    {TableKind::lambda_f_pho, {4, 2}, "CO"},
};

}  // namespace

const PrintedTable& printed_table(TableKind kind) {
    static const PrintedTable c = make_lambda_c();
    static const PrintedTable p = make_lambda_f_pho();
    static const PrintedTable k = make_lambda_f_kratzer();
    switch (kind) {
        case TableKind::lambda_c: return c;
        case TableKind::lambda_f_pho: return p;
        case TableKind::lambda_f_kratzer: return k;
    }
    return c;
}

bool suspected_misprint(TableKind kind, const QuantumNumbers& qn, const std::string& molecule) {
    return std::any_of(std::begin(kMisprints), std::end(kMisprints), [&](const Flag& f) {
        return f.kind == kind && f.qn == qn && iequals(f.molecule, molecule);
    });
}

double Discrepancy::ratio() const {
    if (!printed || !computed) return std::numeric_limits<double>::quiet_NaN();
    return *computed / *printed;
}

double Discrepancy::rel_diff() const {
    if (!printed || !computed) return std::numeric_limits<double>::quiet_NaN();
    return std::abs(*computed - *printed) / std::abs(*printed);
}

std::vector<Discrepancy> compare_with_printed(const CriticalTable& computed) {
    const auto& ref = printed_table(computed.kind);
    std::vector<Discrepancy> out;
    for (const auto& row : ref.rows) {
        const auto r = std::find(computed.rows.begin(), computed.rows.end(), row.qn);
        if (r == computed.rows.end()) continue;
        const auto ri = static_cast<std::size_t>(r - computed.rows.begin());
        for (std::size_t j = 0; j < ref.molecules.size(); ++j) {
            const auto c = std::find_if(computed.molecules.begin(), computed.molecules.end(),
                                        [&](const std::string& m) { return iequals(m, ref.molecules[j]); });
            if (c == computed.molecules.end()) continue;
            const auto& cell = computed.cells[ri][static_cast<std::size_t>(c - computed.molecules.begin())];
            Discrepancy d;
            d.qn = row.qn;
            d.molecule = ref.molecules[j];
            d.printed = row.values[j];
            if (cell.point) d.computed = cell.point->lambda_value;
            d.reason = cell.reason;
            d.misprint = suspected_misprint(computed.kind, row.qn, ref.molecules[j]);
            out.push_back(d);
        }
    }
    return out;
}

ReproductionSummary summarize(const std::vector<Discrepancy>& d, double rel_tol,
                              const std::vector<std::string>& molecules) {
    ReproductionSummary s;
    for (const auto& x : d) {
        if (!molecules.empty() && std::none_of(molecules.begin(), molecules.end(),
                                               [&](const std::string& m) { return iequals(m, x.molecule); })) {
            continue;
        }
        if (x.misprint) {
            ++s.excluded;
            continue;
        }
        if (!x.printed || !x.computed) continue;
        ++s.compared;
        if (x.rel_diff() <= rel_tol) ++s.within;
    }
    return s;
}

}  // namespace eupmol
