#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eupmol {

std::string_view version();

// empty, number, integer or text
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct DataTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, json };
OutputFormat output_format_from_string(std::string_view s);
std::string_view extension(OutputFormat f);

// Comment line written at the top of every output file.
struct OutputMeta {
    std::string units;
    std::string config;  // canonical text of the run configuration; only its hash is written
};

std::uint64_t fnv1a(std::string_view data);

/// "%.17g", with nan/inf spelled out.
std::string format_double(double x);

/// "# eupmol <version> units=<label> config=<16 hex digits>"
std::string header_comment(const OutputMeta& meta);

void write_csv(std::ostream& os, const DataTable& t, const OutputMeta& meta);
void write_json(std::ostream& os, const DataTable& t, const OutputMeta& meta);
void write_table(std::ostream& os, const DataTable& t, const OutputMeta& meta, OutputFormat f);

/// Writes to path, creating parent directories. Throws std::runtime_error
/// when the file cannot be opened.
void write_table_file(const std::filesystem::path& path, const DataTable& t, const OutputMeta& meta,
                      OutputFormat f);

}  // namespace eupmol
