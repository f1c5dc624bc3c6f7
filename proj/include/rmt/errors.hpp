#pragma once
#include <stdexcept>
#include <string>

namespace rmt {

// Exit-code contract used by the CLI: 2 argument, 3 data, 4 numerical.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : ArgumentError {
    using ArgumentError::ArgumentError;
};
struct PreconditionError : ArgumentError {
    using ArgumentError::ArgumentError;
};
struct InsufficientDataError : ArgumentError {
    using ArgumentError::ArgumentError;
};

struct DataError : std::runtime_error {
    long line = 0;
    DataError(const std::string& msg, long line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
          line(line_no) {}
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegeneracyError : NumericalError {
    int order = -1;
    DegeneracyError(const std::string& msg, int ord)
        : NumericalError(msg + " (order " + std::to_string(ord) + ")"), order(ord) {}
};
struct ContinuationError : NumericalError {
    double location = 0;
    ContinuationError(const std::string& msg, double loc)
        : NumericalError(msg + " (near s = " + std::to_string(loc) + ")"),
          location(loc) {}
};
struct ValidationError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace rmt
