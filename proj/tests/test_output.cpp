#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "eupmol/output.hpp"

using namespace eupmol;

TEST_CASE("doubles round trip") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    CHECK(format_double(NAN) == "nan");
    CHECK(format_double(INFINITY) == "inf");
    CHECK(format_double(-INFINITY) == "-inf");
}

TEST_CASE("fnv1a") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("header line") {
    const auto h = header_comment({"hartree-amu", "x"});
    CHECK(h.rfind("# eupmol ", 0) == 0);
    CHECK(h.find(std::string(version())) != std::string::npos);
    CHECK(h.find("units=hartree-amu") != std::string::npos);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a("x")));
    CHECK(h.substr(h.size() - 23) == std::string("config=") + hex);
}

namespace {

DataTable sample() {
    DataTable t;
    t.columns = {"name", "n", "E"};
    t.rows.push_back({std::string("a,b"), 3LL, 0.5});
    t.rows.push_back({std::string("say \"hi\""), std::monostate{}, NAN});
    return t;
}

}  // namespace

TEST_CASE("csv") {
    std::ostringstream os;
    write_csv(os, sample(), {"u", "c"});
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == header_comment({"u", "c"}));
    std::getline(is, line);
    CHECK(line == "name,n,E");
    std::getline(is, line);
    CHECK(line == "\"a,b\",3,0.5");
    std::getline(is, line);
    CHECK(line == "\"say \"\"hi\"\"\",,nan");
}

TEST_CASE("json") {
    std::ostringstream os;
    write_json(os, sample(), {"u", "c"});
    const auto j = nlohmann::json::parse(os.str());
    CHECK(j["units"] == "u");
    CHECK(j["columns"].size() == 3);
    CHECK(j["rows"][0][0] == "a,b");
    CHECK(j["rows"][0][1] == 3);
    CHECK(j["rows"][0][2] == 0.5);
    CHECK(j["rows"][1][1].is_null());
}

TEST_CASE("formats and files") {
    CHECK(output_format_from_string("json") == OutputFormat::json);
    CHECK(extension(OutputFormat::csv) == ".csv");
    CHECK_THROWS(output_format_from_string("xml"));

    const auto dir = std::filesystem::temp_directory_path() / "eupmol_test_output" / "nested";
    std::filesystem::remove_all(dir.parent_path());
    write_table_file(dir / "t.csv", sample(), {"u", "c"}, OutputFormat::csv);
    CHECK(std::filesystem::exists(dir / "t.csv"));
    CHECK_THROWS_AS(write_table_file(dir / "t.csv" / "x.csv", sample(), {"u", "c"}, OutputFormat::csv),
                    std::runtime_error);
    std::filesystem::remove_all(dir.parent_path());
}
