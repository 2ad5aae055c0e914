#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eupmol/oracle.hpp"
#include "eupmol/spectra.hpp"

namespace eupmol {

namespace exit_code {
constexpr int ok = 0;
constexpr int validation_failed = 1;
constexpr int usage = 2;
constexpr int computation = 3;
}  // namespace exit_code

// min:max:steps, inclusive of both ends
struct Sweep {
    double min = 0.0;
    double max = 0.0;
    int steps = 2;

    std::vector<double> values() const;
};

Sweep parse_sweep(std::string_view text);

/// Closed form with the first term of one family's energy scaled by `factor`;
/// used to check that validation notices a wrong formula.
ClosedForm mutated_closed_form(Family which, double factor = 1.01);

/// Entry point of the eupmol tool. Returns an exit_code value.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eupmol
