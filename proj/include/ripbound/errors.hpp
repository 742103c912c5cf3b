#pragma once

#include <stdexcept>
#include <string>

namespace ripbound {

// A caller violated an operation's precondition (bad dimensions,
// out-of-range index, non-positive singular value, ...).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested enumeration would exceed the configured subset budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix text format error, with 1-based location.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long line, long column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}

    long line;
    long column;
};

// Root isolation could not bracket a root of a polynomial that is
// real-rooted by construction; carries the coefficients for diagnosis.
class RootIsolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ripbound
