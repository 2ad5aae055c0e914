#pragma once

#include <stdexcept>
#include <string>

namespace eupmol {

// Invalid argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// The requested critical point does not exist in the searched range.
class NoCrossingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonNormalizableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Iterative method ran out of budget. Carries the best estimate found so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}
    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

// Internal consistency check failed (e.g. a quantity that must be real is not).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace eupmol
