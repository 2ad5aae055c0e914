#include "eupmol/output.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "eupmol/errors.hpp"

namespace eupmol {

namespace {

std::string csv_field(const Cell& c) {
    struct {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double x) const { return format_double(x); }
        std::string operator()(long long x) const { return std::to_string(x); }
        std::string operator()(const std::string& s) const {
            if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
            std::string q = "\"";
            for (char ch : s) {
                if (ch == '"') q += '"';
                q += ch;
            }
            return q + '"';
        }
    } visit;
    return std::visit(visit, c);
}

nlohmann::json json_value(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return format_double(*d);  // JSON has no nan/inf
        return *d;
    }
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    return nullptr;
}

}  // namespace

std::string_view version() { return EUPMOL_VERSION; }

OutputFormat output_format_from_string(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw DomainError("unknown output format '" + std::string(s) + "' (csv, json)");
}

std::string_view extension(OutputFormat f) { return f == OutputFormat::csv ? ".csv" : ".json"; }

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string header_comment(const OutputMeta& meta) {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, fnv1a(meta.config));
    return "# eupmol " + std::string(version()) + " units=" + meta.units + " config=" + hash;
}

void write_csv(std::ostream& os, const DataTable& t, const OutputMeta& meta) {
    os << header_comment(meta) << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const DataTable& t, const OutputMeta& meta) {
    nlohmann::ordered_json j;
    j["header"] = header_comment(meta).substr(2);
    j["units"] = meta.units;
    j["columns"] = t.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::json::array();
        for (const auto& c : row) r.push_back(json_value(c));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    os << j.dump(1) << '\n';
}

void write_table(std::ostream& os, const DataTable& t, const OutputMeta& meta, OutputFormat f) {
    if (f == OutputFormat::csv) {
        write_csv(os, t, meta);
    } else {
        write_json(os, t, meta);
    }
}

void write_table_file(const std::filesystem::path& path, const DataTable& t, const OutputMeta& meta,
                      OutputFormat f) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    write_table(os, t, meta, f);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace eupmol
